# src/calculators/kg_fields/__init__.py
# Package initialization
