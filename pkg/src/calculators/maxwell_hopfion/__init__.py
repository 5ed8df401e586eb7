# src/calculators/maxwell_hopfion/__init__.py
# Package initialization
