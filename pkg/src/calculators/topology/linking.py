# src/calculators/topology/linking.py
"""
Linking number of two closed curves.

    gauss        (1/4 pi) sum (m1 - m2) . (d1 x d2) / |m1 - m2|^3 over
                 segment midpoints, refined by doubling the resolution
    solid_angle  exact signed solid angle of every segment quadrilateral
                 (polyline-exact, no refinement needed)
"""
import logging
import math
from typing import Callable, Union

import numpy as np
from scipy.spatial.distance import cdist

from src.calculators.topology.tracing import loop_sampler
from src.models.trace import StreamlineTrace
from src.utils.errors import DomainError, TraceProximityError

logger = logging.getLogger(__name__)

try:
    from numba import njit, prange  # type: ignore

    def _numba_available() -> bool:
        return True
except ModuleNotFoundError:  # pragma: no cover - executed only when Numba absent
    prange = range

    def njit(*args, **kwargs):  # type: ignore
        def decorator(func):
            return func

        return decorator

    def _numba_available() -> bool:
        return False


METHODS = ("gauss", "solid_angle")
START_POINTS = 256
MAX_POINTS = 8192
AGREEMENT = 1e-3

Curve = Union[StreamlineTrace, np.ndarray]


# ----- kernels ------------------------------------------------------------------ #
@njit(cache=True, parallel=True)
def _gauss_sum(p: np.ndarray, q: np.ndarray) -> float:
    n = p.shape[0]
    k = q.shape[0]
    rows = np.zeros(n)
    for i in prange(n):
        i2 = (i + 1) % n
        d1 = p[i2] - p[i]
        m1 = 0.5 * (p[i2] + p[i])
        acc = 0.0
        for j in range(k):
            j2 = (j + 1) % k
            d2 = q[j2] - q[j]
            r = m1 - 0.5 * (q[j2] + q[j])
            cx = d1[1] * d2[2] - d1[2] * d2[1]
            cy = d1[2] * d2[0] - d1[0] * d2[2]
            cz = d1[0] * d2[1] - d1[1] * d2[0]
            dist = math.sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])
            acc += (r[0] * cx + r[1] * cy + r[2] * cz) / (dist * dist * dist)
        rows[i] = acc
    return rows.sum() / (4.0 * math.pi)


@njit(cache=True, parallel=True)
def _solid_angle_sum(ls: np.ndarray, ks: np.ndarray) -> float:
    # both polylines closed explicitly: last row equals first
    nl = ls.shape[0]
    nk = ks.shape[0]
    rows = np.zeros(nk - 1)
    for i in prange(nk - 1):
        acc = 0.0
        for j in range(nl - 1):
            a = ls[j] - ks[i]
            b = ls[j] - ks[i + 1]
            c = ls[j + 1] - ks[i + 1]
            d = ls[j + 1] - ks[i]
            p = np.dot(a, np.cross(b, c))
            an = np.sqrt(np.dot(a, a))
            bn = np.sqrt(np.dot(b, b))
            cn = np.sqrt(np.dot(c, c))
            dn = np.sqrt(np.dot(d, d))
            d1 = an * bn * cn + np.dot(a, b) * cn + np.dot(b, c) * an + np.dot(c, a) * bn
            d2 = an * dn * cn + np.dot(a, d) * cn + np.dot(d, c) * an + np.dot(c, a) * dn
            acc += np.arctan2(p, d1) + np.arctan2(p, d2)
        rows[i] = acc
    return rows.sum() / (2.0 * np.pi)


# ----- helpers ---------------------------------------------------------------------- #
def _resample_closed(loop: np.ndarray, n: int) -> np.ndarray:
    """Equal arc-length resampling of a closed polyline (implicit closing segment)."""
    closed = np.vstack([loop, loop[:1]])
    arc = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(closed, axis=0), axis=1))])
    targets = np.linspace(0.0, arc[-1], n + 1)[:-1]
    return np.column_stack([np.interp(targets, arc, closed[:, k]) for k in range(3)])


def _sampler(curve: Curve) -> Callable[[int], np.ndarray]:
    if isinstance(curve, StreamlineTrace):
        return loop_sampler(curve)
    loop = np.asarray(curve, dtype=float)
    if loop.ndim != 2 or loop.shape[1] != 3 or len(loop) < 3:
        raise DomainError(f"a closed curve needs shape (n >= 3, 3), got {loop.shape}")
    if np.allclose(loop[0], loop[-1]):
        loop = loop[:-1]
    return lambda n: _resample_closed(loop, n)


def _check_separation(p: np.ndarray, q: np.ndarray):
    resolution = max(np.max(np.linalg.norm(np.diff(p, axis=0), axis=1)),
                     np.max(np.linalg.norm(np.diff(q, axis=0), axis=1)))
    gap = float(np.min(cdist(p, q)))
    if gap < resolution:
        raise TraceProximityError(f"curves come within {gap:.3e}, below the resolution {resolution:.3e}")
    return gap


# ----- public ------------------------------------------------------------------- #
def linking_number(t1: Curve, t2: Curve, method: str = "gauss",
                   n_start: int = START_POINTS, n_max: int = MAX_POINTS) -> float:
    """
    Linking number of two closed curves (traces or (n, 3) point loops).

    Traces must pass the closure threshold; one period of each is used.
    The Gauss sum doubles the resolution until two levels agree to 1e-3.
    """
    if method not in METHODS:
        raise DomainError(f"linking method must be one of {METHODS}, got '{method}'")

    logger.debug(f"linking via {method} (compiled kernels: {_numba_available()})")
    first, second = _sampler(t1), _sampler(t2)
    n = n_start
    p, q = first(n), second(n)
    gap = _check_separation(p, q)

    if method == "solid_angle":
        value = float(_solid_angle_sum(np.vstack([p, p[:1]]), np.vstack([q, q[:1]])))
        logger.info(f"solid-angle linking number {value:.6f} (min gap {gap:.3e})")
        return value

    value = float(_gauss_sum(p, q))
    while n < n_max:
        n *= 2
        p, q = first(n), second(n)
        refined = float(_gauss_sum(p, q))
        converged = abs(refined - value) < AGREEMENT
        value = refined
        if converged:
            break
    else:
        logger.warning(f"Gauss linking sum not converged at {n} points, last value {value:.6f}")
    logger.info(f"Gauss linking number {value:.6f} with {n} points (min gap {gap:.3e})")
    return value
