# src/models/dynamics.py
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from src.utils.errors import DomainError

# quoted photon bound, carried as reference metadata only
PHOTON_UNCERTAINTY_BOUND = 1.5 * float(np.sqrt(1.0 + 4.0 * np.sqrt(5.0) / 9.0))
NONRELATIVISTIC_BOUND = 1.5

DELTA_P_CONVENTIONS = ("symmetric", "spin_weighted")


@dataclass(frozen=True)
class MomentResult:
    """Spatial moment of the charge density at one time."""
    value: float
    error: float
    t: float
    power: int = 2

    def __post_init__(self):
        if self.power <= 0 or self.power % 2:
            raise DomainError(f"moment power must be a positive even integer, got {self.power}")


@dataclass(frozen=True)
class SpreadingCoefficients:
    """<r^2>(t) = A / m^2 + B (a^2 + t^2)."""
    A: float
    B: float
    fit_residual: float
    t_samples: Tuple[float, ...] = ()
    values: Tuple[float, ...] = ()

    def to_dict(self):
        return {"A": self.A, "B": self.B, "fit_residual": self.fit_residual,
                "t_samples": list(self.t_samples), "values": list(self.values)}


@dataclass(frozen=True)
class MomentumMoments:
    """Momentum-space expectation values of a rest-frame state."""
    norm: float
    p2: float                 # <p^2>, identical in both conventions
    pz_spin_weighted: float   # <p_z> under the spin-weighted density
    p2_over_e2: float         # <p^2/E^2>

    def delta_p(self, convention: str) -> float:
        if convention == "symmetric":
            return float(np.sqrt(self.p2))
        if convention == "spin_weighted":
            return float(np.sqrt(self.p2 - self.pz_spin_weighted ** 2))
        raise DomainError(f"delta-p convention must be one of {DELTA_P_CONVENTIONS}, got '{convention}'")


@dataclass(frozen=True)
class UncertaintyProduct:
    delta_r: float
    delta_p: Dict[str, float]
    mean_position: Tuple[float, float, float]
    convention: str = "symmetric"
    metadata: Dict[str, float] = field(default_factory=lambda: {
        "nonrelativistic_bound": NONRELATIVISTIC_BOUND,
        "photon_reference_bound": PHOTON_UNCERTAINTY_BOUND,
    })

    @property
    def product(self) -> float:
        return self.delta_r * self.delta_p[self.convention]

    def products(self) -> Dict[str, float]:
        return {name: self.delta_r * dp for name, dp in self.delta_p.items()}

    def to_dict(self):
        return {"delta_r": self.delta_r, "delta_p": dict(self.delta_p),
                "mean_position": list(self.mean_position), "convention": self.convention,
                "product": self.product, "products": self.products(),
                "metadata": dict(self.metadata)}


@dataclass(frozen=True)
class ChargeProfile:
    """j0 on an x-z grid at y = 0, indexed [ix, iz]."""
    x: np.ndarray
    z: np.ndarray
    j0: np.ndarray
    t: float = 0.0

    def second_moments(self) -> Tuple[float, float]:
        weights = self.j0 / np.sum(self.j0)
        xx, zz = np.meshgrid(self.x, self.z, indexing="ij")
        mean_x = np.sum(weights * xx)
        mean_z = np.sum(weights * zz)
        return (float(np.sum(weights * (xx - mean_x) ** 2)),
                float(np.sum(weights * (zz - mean_z) ** 2)))

    @property
    def z_to_x_ratio(self) -> float:
        sx, sz = self.second_moments()
        return sz / sx
