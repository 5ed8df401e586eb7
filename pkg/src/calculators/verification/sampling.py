# src/calculators/verification/sampling.py
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.models.packet import BispinorKind, SpaceTimePoint


@dataclass(frozen=True)
class SuiteSettings:
    """Sizes that distinguish the quick and full verification levels."""
    n_points: int
    l_values: Tuple[int, ...]
    velocities: Tuple[float, ...]
    norm_cases: Tuple[Tuple[int, float, float], ...]     # (l, a, m)
    norm_kinds: Tuple[BispinorKind, ...]
    spreading_sizes: Tuple[float, ...]
    uncertainty_sizes: Tuple[float, ...]


LEVELS = {
    "quick": SuiteSettings(
        n_points=4, l_values=(0, 1), velocities=(0.0, 0.5),
        norm_cases=((0, 1.0, 1.0), (1, 1.0, 1.0)),
        norm_kinds=(BispinorKind.PSI_PLUS, BispinorKind.PHI_MINUS),
        spreading_sizes=(0.5, 1.0, 2.0), uncertainty_sizes=(5.0, 10.0)),
    "full": SuiteSettings(
        n_points=30, l_values=(0, 1, 2), velocities=(0.0, 0.5, 0.99),
        norm_cases=tuple((l, a, m) for l in (0, 1, 2) for a, m in ((0.5, 1.0), (1.0, 1.0), (2.0, 0.5))),
        norm_kinds=tuple(BispinorKind),
        spreading_sizes=(0.5, 1.0, 2.0, 5.0, 10.0), uncertainty_sizes=(0.5, 1.0, 2.0, 5.0, 10.0)),
}


def random_points(rng: np.random.Generator, n: int, a: float,
                  with_time: bool = True) -> List[SpaceTimePoint]:
    """Events in the box |x|, |y|, |z| <= 2a and |t| <= a."""
    space = rng.uniform(-2.0 * a, 2.0 * a, size=(n, 3))
    times = rng.uniform(-a, a, size=n) if with_time else np.zeros(n)
    return [SpaceTimePoint(float(x), float(y), float(z), float(t))
            for (x, y, z), t in zip(space, times)]
