# src/utils/tolerance.py
"""
Named acceptance thresholds for the verification checks.

A global override (the CLI --tol flag) replaces every numeric threshold;
1e-30 is the conventional way to force every check to fail by name.
"""
from typing import Optional

from src.utils.errors import DomainError

TOLERANCES = {
    # residuals
    "kg_residual": 1e-6,
    "dirac_residual": 1e-6,
    "maxwell_residual": 1e-6,
    "conservation_residual": 1e-6,
    "massless_residual": 1e-6,
    # algebra
    "null_field": 1e-12,
    "unit_speed": 1e-10,
    "hopf_identity": 1e-10,
    "level_line": 1e-9,
    "velocity_mutual": 1e-9,
    "mirror_relation": 1e-10,
    "fierz": 1e-10,
    "rotation_phase": 1e-9,
    # eigenvalues
    "mz_eigenvalue": 1e-6,
    "rotation_flip": 1e-6,
    # integrals
    "norm": 1e-6,
    "momentum_norm": 1e-8,
    "radius_oracle": 1e-4,
    "spreading_fit": 1e-4,
    "spreading_b": 1e-4,
    "time_symmetry": 1e-6,
    "uncertainty_limit": 0.05,
    # topology
    "closure": 1e-3,
    "linking": 0.05,
    "causality": 1e-12,
}


def get_tolerance(name: str, override: Optional[float] = None) -> float:
    """Threshold for check `name`, or the global override when given."""
    if name not in TOLERANCES:
        raise DomainError(f"no tolerance registered for '{name}'")
    if override is not None:
        if not override > 0:
            raise DomainError(f"tolerance override must be positive, got {override}")
        return float(override)
    return TOLERANCES[name]
