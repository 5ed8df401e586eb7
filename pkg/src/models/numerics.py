# src/models/numerics.py
from dataclasses import dataclass
from typing import Union

from src.utils.errors import DomainError

Scalar = Union[float, complex]


@dataclass(frozen=True)
class ToleranceConfig:
    """Accuracy targets for a numerical kernel call."""
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_evals: int = 200_000

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if not 0 < self.abs_tol < 1:
            raise DomainError(f"abs_tol must lie in (0, 1), got {self.abs_tol}")
        if not 1 <= self.max_evals <= 100_000_000:
            raise DomainError(f"max_evals out of range: {self.max_evals}")

    @classmethod
    def special_functions(cls) -> "ToleranceConfig":
        return cls(rel_tol=1e-10, abs_tol=1e-12)

    @classmethod
    def quadrature_3d(cls) -> "ToleranceConfig":
        return cls(rel_tol=1e-7, abs_tol=1e-12, max_evals=20_000_000)


@dataclass(frozen=True)
class QuadratureResult:
    value: Scalar
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise DomainError("error_estimate must be non-negative")
        if self.evaluations < 1:
            raise DomainError("evaluations must be at least 1")


@dataclass(frozen=True)
class DerivativeResult:
    """Richardson-extrapolated derivative with its tableau error estimate."""
    value: Scalar
    error_estimate: float
    step: float
    flagged: bool = False
