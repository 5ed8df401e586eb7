# src/models/fields.py
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.utils.errors import DomainError


@dataclass(frozen=True)
class Bispinor:
    """Weyl-representation bispinor: upper pair phi, lower pair chi."""
    components: np.ndarray  # (4,) complex

    def __post_init__(self):
        comps = np.asarray(self.components, dtype=np.complex128)
        if comps.shape != (4,):
            raise DomainError(f"a bispinor has four components, got shape {comps.shape}")
        if not np.all(np.isfinite(comps)):
            raise DomainError("bispinor components must be finite")
        object.__setattr__(self, "components", comps)

    @property
    def psi1(self) -> complex:
        return complex(self.components[0])

    @property
    def psi2(self) -> complex:
        return complex(self.components[1])

    @property
    def psi3(self) -> complex:
        return complex(self.components[2])

    @property
    def psi4(self) -> complex:
        return complex(self.components[3])

    @property
    def phi(self) -> np.ndarray:
        return self.components[:2]

    @property
    def chi(self) -> np.ndarray:
        return self.components[2:]


@dataclass(frozen=True)
class FourCurrent:
    j0: float
    jx: float
    jy: float
    jz: float

    def __post_init__(self):
        if self.j0 < 0:
            raise DomainError(f"probability density must be non-negative, got {self.j0}")

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.jx, self.jy, self.jz])

    @property
    def interval(self) -> float:
        """j0^2 - |j|^2 (non-negative for a causal current)."""
        return self.j0 * self.j0 - float(np.dot(self.spatial, self.spatial))

    def as_array(self) -> np.ndarray:
        return np.array([self.j0, self.jx, self.jy, self.jz])


@dataclass(frozen=True)
class NormalizationConstant:
    N: float
    l_effective: int
    doppler: float = 1.0   # N^2 already includes this factor for boosted states

    def __post_init__(self):
        if not self.N > 0:
            raise DomainError(f"normalisation constant must be positive, got {self.N}")


@dataclass(frozen=True)
class RSVector:
    """Riemann-Silberstein vector F = (E + iB)/sqrt(2)."""
    Fx: complex
    Fy: complex
    Fz: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.Fx, self.Fy, self.Fz], dtype=np.complex128)

    @property
    def square(self) -> complex:
        """F.F (zero for a null field)."""
        return complex(self.Fx * self.Fx + self.Fy * self.Fy + self.Fz * self.Fz)

    @property
    def norm2(self) -> float:
        return float(abs(self.Fx) ** 2 + abs(self.Fy) ** 2 + abs(self.Fz) ** 2)


@dataclass(frozen=True)
class EMSample:
    E: Tuple[float, float, float]
    B: Tuple[float, float, float]
    P: Tuple[float, float, float]
    u: float
    vM: Tuple[float, float, float]

    def __post_init__(self):
        if self.u < 0:
            raise DomainError(f"energy density must be non-negative, got {self.u}")


@dataclass(frozen=True)
class HopfValue:
    """Value of the Hopf map; `upsilon` is None at the point at infinity."""
    upsilon: complex = None

    @property
    def is_infinite(self) -> bool:
        return self.upsilon is None
