# src/calculators/dirac_states/__init__.py
# Package initialization
