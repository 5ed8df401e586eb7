# src/calculators/topology/__init__.py
# Package initialization
