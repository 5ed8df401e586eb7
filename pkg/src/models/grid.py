# src/models/grid.py
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from src.utils.errors import DomainError

COORDINATES = ("x", "y", "z", "t")


@dataclass(frozen=True)
class AxisSpec:
    name: str
    min: float
    max: float
    count: int

    def __post_init__(self):
        if self.name not in COORDINATES:
            raise DomainError(f"grid axis must be one of {COORDINATES}, got '{self.name}'")
        if not self.min < self.max:
            raise DomainError(f"axis {self.name}: min {self.min} must be below max {self.max}")
        if self.count < 2:
            raise DomainError(f"axis {self.name}: need at least 2 points, got {self.count}")

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class GridSpec:
    """
    Sampling grid: active axes in outer-to-inner order plus fixed values
    for the suppressed coordinates (default 0).
    """
    axes: Tuple[AxisSpec, ...]
    fixed: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        names = [axis.name for axis in self.axes]
        if not names:
            raise DomainError("a grid needs at least one active axis")
        if len(set(names)) != len(names):
            raise DomainError(f"repeated grid axis in {names}")
        clash = set(names) & set(self.fixed)
        if clash:
            raise DomainError(f"coordinates {sorted(clash)} are both active and fixed")
        unknown = set(self.fixed) - set(COORDINATES)
        if unknown:
            raise DomainError(f"unknown fixed coordinates {sorted(unknown)}")

    @classmethod
    def parse(cls, text: str, at: str = "") -> "GridSpec":
        """
        Parse "x=-3:3:101,z=-3:3:101" and an optional "y=0,t=1".
        """
        axes = []
        for chunk in filter(None, (c.strip() for c in text.split(","))):
            try:
                name, bounds = chunk.split("=")
                lo, hi, count = bounds.split(":")
                axes.append(AxisSpec(name.strip(), float(lo), float(hi), int(count)))
            except ValueError as err:
                if isinstance(err, DomainError):
                    raise
                raise DomainError(f"cannot parse grid axis '{chunk}' (expected name=min:max:count)") from err
        fixed = {}
        for chunk in filter(None, (c.strip() for c in at.split(","))):
            try:
                name, value = chunk.split("=")
                fixed[name.strip()] = float(value)
            except ValueError as err:
                raise DomainError(f"cannot parse fixed coordinate '{chunk}' (expected name=value)") from err
        return cls(axes=tuple(axes), fixed=fixed)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(axis.name for axis in self.axes)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(axis.count for axis in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    def mesh(self) -> Dict[str, np.ndarray]:
        """All four coordinates as flat arrays, first axis outermost."""
        grids = np.meshgrid(*(axis.values for axis in self.axes), indexing="ij")
        coords = {name: grid.ravel() for name, grid in zip(self.names, grids)}
        for name in COORDINATES:
            if name not in coords:
                coords[name] = np.full(self.size, float(self.fixed.get(name, 0.0)))
        return coords

    def to_dict(self):
        return {"axes": [{"name": a.name, "min": a.min, "max": a.max, "count": a.count}
                         for a in self.axes],
                "fixed": {name: float(self.fixed.get(name, 0.0))
                          for name in COORDINATES if name not in self.names}}
