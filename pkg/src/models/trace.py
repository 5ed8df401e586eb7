# src/models/trace.py
from dataclasses import dataclass, field
from typing import Any, Optional, Tuple

import numpy as np

from src.utils.errors import DomainError


@dataclass
class StreamlineTrace:
    """Ordered polyline of an integral curve."""
    points: np.ndarray            # (n, 3)
    lambdas: np.ndarray           # (n,) curve parameter, strictly increasing
    arc: np.ndarray               # (n,) cumulative arc length
    seed: Tuple[float, float, float]
    closed_hint: bool = False
    failed: bool = False
    message: str = ""
    source: str = ""
    interpolant: Optional[Any] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        self.lambdas = np.asarray(self.lambdas, dtype=float)
        self.arc = np.asarray(self.arc, dtype=float)
        if self.points.ndim != 2 or self.points.shape[1] != 3:
            raise DomainError(f"trace points must have shape (n, 3), got {self.points.shape}")
        if len(self.points) < 2:
            raise DomainError("a trace needs at least two points")
        if not (len(self.lambdas) == len(self.arc) == len(self.points)):
            raise DomainError("points, lambdas and arc must have equal length")
        if np.any(np.diff(self.lambdas) <= 0):
            raise DomainError("trace parameter values must be strictly increasing")

    @property
    def length(self) -> float:
        return float(self.arc[-1])

    def position(self, lam):
        """Position at parameter value(s) `lam` (dense output when available)."""
        lam = np.asarray(lam, dtype=float)
        if self.interpolant is not None:
            return np.asarray(self.interpolant(lam))[:3].T
        return np.stack([np.interp(lam, self.lambdas, self.points[:, k]) for k in range(3)], axis=-1)

    def resample(self, n: int, arc_stop: Optional[float] = None) -> np.ndarray:
        """`n` points equally spaced in arc length over [0, arc_stop]."""
        arc_stop = self.length if arc_stop is None else arc_stop
        targets = np.linspace(0.0, arc_stop, n)
        lam = np.interp(targets, self.arc, self.lambdas)
        return self.position(lam)

    def truncated(self, arc_stop: float) -> "StreamlineTrace":
        keep = self.arc < arc_stop
        lam_stop = float(np.interp(arc_stop, self.arc, self.lambdas))
        end = self.position(lam_stop).reshape(1, 3)
        return StreamlineTrace(
            points=np.vstack([self.points[keep], end]),
            lambdas=np.append(self.lambdas[keep], lam_stop),
            arc=np.append(self.arc[keep], arc_stop),
            seed=self.seed, closed_hint=self.closed_hint, failed=self.failed,
            message=self.message, source=self.source, interpolant=self.interpolant)

    def to_dict(self):
        return {
            "seed": [float(c) for c in self.seed],
            "source": self.source,
            "closed_hint": bool(self.closed_hint),
            "failed": bool(self.failed),
            "message": self.message,
            "length": self.length,
            "n_points": int(len(self.points)),
        }
