# src/calculators/verification/__init__.py
# Package initialization
