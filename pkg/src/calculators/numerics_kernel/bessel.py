"""
Macdonald functions K_nu(z) for complex z in the right half-plane
-----------------------------------------------------------------
Only integer orders are needed. K_0 and K_1 come from one of two branches:

    |z| <  2   ascending power series (with the log terms of I_0, I_1)
    |z| >= 2   Steed/Temme continued fraction CF2, evaluated in complex
               arithmetic, returning e^z-scaled values

Higher orders follow from the upward recurrence

    K_{nu+1}(z) = K_{nu-1}(z) + (2 nu / z) K_nu(z)

which is stable because K grows with order.

The heavy lifting lives in Numba kernels (`_k01_scaled`, `_k_scaled_table`).
Everything works unchanged, only slower, when Numba is absent.

Public API
~~~~~~~~~~
    bessel_k(nu, z)              K_nu(z), scalar or array z
    bessel_k_scaled(nu, z)       e^z K_nu(z)
    bessel_k_table(nu_max, z)    e^z K_nu(z) for nu = 0..nu_max, shape z.shape + (nu_max+1,)
    crossover_check(z)           series vs CF2 agreement near |z| = 2
"""
from __future__ import annotations

import cmath
import logging
import math
from typing import Tuple, Union

import numpy as np

from src.utils.errors import BesselAccuracyError, DomainError

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# Attempt to import Numba; fall back automatically if unavailable.
# -----------------------------------------------------------------------------
try:
    from numba import njit  # type: ignore

    def _numba_available() -> bool:
        return True
except ModuleNotFoundError:  # pragma: no cover - executed only when Numba absent

    def njit(*args, **kwargs):  # type: ignore
        def decorator(func):
            return func

        return decorator

    def _numba_available() -> bool:
        return False


SERIES_RADIUS = 2.0
_EULER_GAMMA = 0.57721566490153286061
_EPS = 1e-16
_MAX_TERMS = 10_000

ArrayOrScalar = Union[complex, float, np.ndarray]


# -----------------------------------------------------------------------------
# JIT kernels
# -----------------------------------------------------------------------------
@njit(cache=True, nogil=True)
def _k01_series(z: complex) -> Tuple[complex, complex]:
    """Unscaled K_0, K_1 from the ascending series (|z| < 2)."""
    q = 0.25 * z * z
    log_half = cmath.log(0.5 * z)

    term0 = 1.0 + 0.0j        # (z^2/4)^k / (k!)^2
    term1 = 1.0 + 0.0j        # (z^2/4)^k / (k! (k+1)!)
    harmonic = 0.0
    i0 = 0.0j
    i1_sum = 0.0j
    k0_sum = 0.0j
    k1_sum = 0.0j
    for k in range(200):
        i0 += term0
        i1_sum += term1
        k0_sum += harmonic * term0
        k1_sum += (2.0 * (harmonic - _EULER_GAMMA) + 1.0 / (k + 1)) * term1
        if abs(term0) < _EPS * abs(i0) and k > 2:
            break
        term0 = term0 * q / ((k + 1) * (k + 1))
        term1 = term1 * q / ((k + 1) * (k + 2))
        harmonic += 1.0 / (k + 1)

    i1 = 0.5 * z * i1_sum
    k0 = -(log_half + _EULER_GAMMA) * i0 + k0_sum
    k1 = 1.0 / z + log_half * i1 - 0.25 * z * k1_sum
    return k0, k1


@njit(cache=True, nogil=True)
def _k01_cf2(z: complex) -> Tuple[complex, complex]:
    """e^z-scaled K_0, K_1 from Steed's CF2 with Temme's normalisation (mu = 0)."""
    b = 2.0 * (1.0 + z)
    d = 1.0 / b
    h = d
    delh = d
    q1 = 0.0j
    q2 = 1.0 + 0.0j
    a1 = 0.25
    q = a1 + 0.0j
    c = a1 + 0.0j
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _MAX_TERMS):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels) < _EPS * abs(s):
            break
    h = a1 * h
    k0 = cmath.sqrt(math.pi / (2.0 * z)) / s
    k1 = k0 * (z + 0.5 - h) / z
    return k0, k1


@njit(cache=True, nogil=True)
def _k01_scaled(z: complex) -> Tuple[complex, complex]:
    if abs(z) < SERIES_RADIUS:
        k0, k1 = _k01_series(z)
        scale = cmath.exp(z)
        return k0 * scale, k1 * scale
    return _k01_cf2(z)


@njit(cache=True, nogil=True)
def _k_scaled_table(z: np.ndarray, nu_max: int) -> np.ndarray:
    n = z.shape[0]
    out = np.empty((n, nu_max + 1), dtype=np.complex128)
    for i in range(n):
        zi = z[i]
        k0, k1 = _k01_scaled(zi)
        out[i, 0] = k0
        if nu_max >= 1:
            out[i, 1] = k1
        for nu in range(1, nu_max):
            out[i, nu + 1] = out[i, nu - 1] + (2.0 * nu / zi) * out[i, nu]
    return out


# -----------------------------------------------------------------------------
# Public wrappers
# -----------------------------------------------------------------------------
def _as_complex_array(z: ArrayOrScalar) -> np.ndarray:
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError("bessel_k argument must be finite")
    if np.any(arr.real <= 0.0):
        raise DomainError("bessel_k requires Re z > 0")
    return arr


def bessel_k_table(nu_max: int, z: ArrayOrScalar) -> np.ndarray:
    """Return e^z K_nu(z) for nu = 0..nu_max; trailing axis indexes the order."""
    if nu_max < 0:
        raise DomainError(f"order must be non-negative, got {nu_max}")
    arr = _as_complex_array(z)
    flat = np.ascontiguousarray(arr.reshape(-1))
    table = _k_scaled_table(flat, int(nu_max))
    return table.reshape(arr.shape + (nu_max + 1,))


def bessel_k_scaled(nu: int, z: ArrayOrScalar) -> ArrayOrScalar:
    """e^z K_nu(z)."""
    values = bessel_k_table(nu, z)[..., nu]
    return complex(values) if np.ndim(values) == 0 else values


def bessel_k(nu: int, z: ArrayOrScalar) -> ArrayOrScalar:
    """K_nu(z) for integer nu >= 0 and Re z > 0."""
    arr = _as_complex_array(z)
    values = bessel_k_table(nu, arr)[..., nu] * np.exp(-arr)
    return complex(values) if np.ndim(values) == 0 else values


def crossover_check(z: complex, rel_tol: float = 1e-12) -> float:
    """
    Evaluate K_0 and K_1 with both branches and return the worst relative
    disagreement. Raises BesselAccuracyError above `rel_tol`.
    """
    z = complex(_as_complex_array(z))
    s0, s1 = _k01_series(z)
    scale = cmath.exp(z)
    c0, c1 = _k01_cf2(z)
    worst = max(abs(s0 * scale - c0) / abs(c0), abs(s1 * scale - c1) / abs(c1))
    logger.debug(f"Bessel crossover at z={z}: relative disagreement {worst:.3e} "
                 f"(compiled kernels: {_numba_available()})")
    if worst > rel_tol:
        raise BesselAccuracyError(
            f"K_0/K_1 branches disagree by {worst:.3e} at z={z} (tolerance {rel_tol:.1e})")
    return worst
