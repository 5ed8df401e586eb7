# src/calculators/numerics_kernel/richardson.py
"""
Central differences with Richardson extrapolation (Ridders' tableau).

The step is halved at every level and the tableau eliminates successive
powers of h^2; the returned value is the tableau entry with the smallest
error estimate.
"""
import logging
from typing import Callable, Optional

import numpy as np

from src.models.numerics import DerivativeResult
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

_SHRINK = 2.0
_SAFE = 2.0


def _central(f: Callable, x0: float, h: float, order: int, f0):
    if order == 1:
        return (f(x0 + h) - f(x0 - h)) / (2.0 * h)
    return (f(x0 + h) - 2.0 * f0 + f(x0 - h)) / (h * h)


def richardson_derivative(f: Callable[[float], complex],
                          x0: float,
                          order: int = 1,
                          h0: float = 0.1,
                          levels: int = 8,
                          rel_tol: Optional[float] = 1e-8) -> DerivativeResult:
    """
    d^order f / dx^order at x0.

    `f` may return a scalar or a numpy array (all entries are differentiated
    at once and share the error estimate, which is the worst entry).
    The result is flagged when the estimate exceeds rel_tol * scale.
    """
    if order not in (1, 2):
        raise DomainError(f"only first and second derivatives are supported, got order={order}")
    if not h0 > 0:
        raise DomainError(f"initial step must be positive, got h0={h0}")

    f0 = f(x0) if order == 2 else None
    fac = _SHRINK * _SHRINK
    tableau = [[np.asarray(_central(f, x0, h0, order, f0), dtype=np.complex128)]]
    best = tableau[0][0]
    err = np.inf
    h = h0
    for i in range(1, levels):
        h /= _SHRINK
        row = [np.asarray(_central(f, x0, h, order, f0), dtype=np.complex128)]
        weight = fac
        for j in range(1, i + 1):
            row.append((row[j - 1] * weight - tableau[i - 1][j - 1]) / (weight - 1.0))
            weight *= fac
            errt = max(float(np.max(np.abs(row[j] - row[j - 1]))),
                       float(np.max(np.abs(row[j] - tableau[i - 1][j - 1]))))
            if errt <= err:
                err = errt
                best = row[j]
        tableau.append(row)
        # stop once higher orders make things worse
        if float(np.max(np.abs(row[i] - tableau[i - 1][i - 1]))) >= _SAFE * err:
            break

    scale = max(float(np.max(np.abs(best))), 1e-300)
    flagged = rel_tol is not None and err > rel_tol * scale
    if flagged:
        logger.debug(f"Richardson estimate {err:.3e} above {rel_tol:.1e} relative at x0={x0}")
    value = complex(best) if best.ndim == 0 else best
    return DerivativeResult(value=value, error_estimate=err, step=h, flagged=flagged)


AXES = ("t", "x", "y", "z")


def default_step(a: float, m: float = None, gamma: float = 1.0) -> float:
    """Initial probe step: a tenth of the smallest physical length scale."""
    scale = a if not m else min(a, 1.0 / m)
    return 0.1 * scale / gamma


def partial_derivative(func: Callable, point, axis: str, order: int = 1,
                       h0: float = 0.1, rel_tol: Optional[float] = 1e-8) -> DerivativeResult:
    """Derivative of func(SpaceTimePoint) along one of t, x, y, z."""
    if axis not in AXES:
        raise DomainError(f"axis must be one of {AXES}, got '{axis}'")
    origin = getattr(point, axis)
    return richardson_derivative(lambda u: func(point.shifted(axis, u - origin)),
                                 origin, order=order, h0=h0, rel_tol=rel_tol)
