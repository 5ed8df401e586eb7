# src/calculators/dynamics/__init__.py
# Package initialization
