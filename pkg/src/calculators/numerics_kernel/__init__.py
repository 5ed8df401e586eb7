# src/calculators/numerics_kernel/__init__.py
# Package initialization
