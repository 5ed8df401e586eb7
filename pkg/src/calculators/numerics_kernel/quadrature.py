# src/calculators/numerics_kernel/quadrature.py
"""
1D and 3D quadrature for exponentially decaying integrands.

integrate_1d wraps QUADPACK (scipy.integrate.quad); complex integrands are
split into real and imaginary parts. Semi-infinite ranges are cut at a
length set by the decay rate and the tail is mapped onto (0, 1] with
x = L - ln(u)/decay.

integrate_3d is a spherical product rule: composite Gauss-Legendre panels in
r, Gauss-Legendre in mu = cos(theta) and the periodic trapezoid in phi
(a single azimuth times 2 pi for axisymmetric integrands). Each dimension
is compared with the rule at half its resolution; only dimensions whose
change exceeds the target are doubled.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate

from src.models.numerics import QuadratureResult, ToleranceConfig
from src.models.packet import PacketParams
from src.utils.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

_MAX_SUBINTERVALS = 2000


# ----- 1D --------------------------------------------------------------- #
def _finite(value):
    return value if np.isfinite(value) else 0.0


def _quad_real(g: Callable[[float], float], lo: float, hi: float,
               tol: ToleranceConfig) -> Tuple[float, float, int]:
    limit = int(min(_MAX_SUBINTERVALS, max(50, tol.max_evals // 42)))
    out = integrate.quad(g, lo, hi, epsabs=tol.abs_tol, epsrel=tol.rel_tol,
                         limit=limit, full_output=1)
    value, abserr, info = out[0], out[1], out[2]
    neval = int(info.get("neval", 1))
    if len(out) > 3:
        target = max(tol.abs_tol, tol.rel_tol * abs(value))
        if not abserr <= target:
            raise QuadratureError(
                f"quad did not converge on [{lo}, {hi}]: {out[3]} "
                f"(error {abserr:.3e} > target {target:.3e})")
        logger.warning(f"quad warning on [{lo}, {hi}] accepted, error {abserr:.3e} within target")
    if neval > tol.max_evals:
        raise QuadratureError(f"quad exceeded {tol.max_evals} evaluations")
    return value, abserr, neval


def _pieces(f: Callable, lower: float, upper: float, decay: Optional[float],
            abs_tol: float):
    """Split the range into finite pieces, each with its own integrand."""
    if lower > upper:
        raise DomainError(f"lower bound {lower} above upper bound {upper}")
    if math.isinf(lower) and math.isinf(upper):
        return (_pieces(f, lower, 0.0, decay, abs_tol)
                + _pieces(f, 0.0, upper, decay, abs_tol))
    if math.isinf(lower):
        return _pieces(lambda x: f(-x), -upper, math.inf, decay, abs_tol)
    if not math.isinf(upper):
        return [(f, lower, upper)]

    rate = decay if decay else 1.0
    cut = lower + (math.log(1.0 / abs_tol) / rate if decay else 0.0)

    def tail(u):
        if u <= 0.0:
            return 0.0
        return _finite(f(cut - math.log(u) / rate)) / (rate * u)

    pieces = [(tail, 0.0, 1.0)]
    if cut > lower:
        pieces.insert(0, (f, lower, cut))
    return pieces


def integrate_1d(f: Callable[[float], complex],
                 lower: float,
                 upper: float,
                 tol: Optional[ToleranceConfig] = None,
                 decay: Optional[float] = None) -> QuadratureResult:
    """
    Integrate f over [lower, upper]; either bound may be infinite.

    `decay` is the exponential decay rate of f at infinity, if known.
    Raises QuadratureError instead of returning an unconverged value.
    """
    tol = tol or ToleranceConfig()
    if math.isfinite(lower) and math.isfinite(upper):
        probe_x = 0.5 * (lower + upper)
    elif math.isfinite(lower):
        probe_x = lower + 0.5
    elif math.isfinite(upper):
        probe_x = upper - 0.5
    else:
        probe_x = 0.0
    is_complex = np.iscomplexobj(f(probe_x))

    value = 0.0j if is_complex else 0.0
    error = 0.0
    evals = 1
    for g, lo, hi in _pieces(f, lower, upper, decay, tol.abs_tol):
        re, re_err, n = _quad_real(lambda x: float(np.real(g(x))), lo, hi, tol)
        value += re
        error += re_err
        evals += n
        if is_complex:
            im, im_err, n = _quad_real(lambda x: float(np.imag(g(x))), lo, hi, tol)
            value += 1j * im
            error += im_err
            evals += n
    return QuadratureResult(value=value, error_estimate=float(error), evaluations=evals)


# ----- 3D --------------------------------------------------------------- #
def truncation_radius(params: PacketParams, t: float, abs_tol: float) -> float:
    """
    Radius beyond which the density envelope exp(-2 m (Re s - a)) is below
    abs_tol. Re s >= sqrt(r^2 + a^2 - t^2) holds at every event.
    """
    decay_length = math.log(1.0 / abs_tol) / (2.0 * params.m)
    return math.sqrt((params.a + decay_length) ** 2 - params.a ** 2 + t * t)


def _probe_radius(f: Callable, abs_tol: float) -> float:
    directions = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0],
                           [0, 0, 1], [0, 0, -1], [1, 1, 1], [-1, -1, 1]], dtype=float)
    directions /= np.linalg.norm(directions, axis=1)[:, None]

    def peak(radius):
        pts = radius * directions
        return float(np.max(np.abs(f(pts[:, 0], pts[:, 1], pts[:, 2]))))

    scale = max(peak(0.0), peak(0.5), peak(1.0), 1e-300)
    radius = 1.0
    while peak(radius) > abs_tol * scale:
        radius *= 1.5
        if radius > 1e4:
            raise QuadratureError("integrand does not decay; cannot choose a truncation radius")
    return radius


def _gauss_legendre(n: int, lo: float, hi: float):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (hi - lo)
    return lo + half * (nodes + 1.0), half * weights


def _spherical_rule(f: Callable, radius: float, panels: int, n_mu: int,
                    n_phi: int, axisymmetric: bool, order: int = 16):
    edges = np.linspace(0.0, radius, panels + 1)
    r_nodes, r_weights = zip(*(_gauss_legendre(order, lo, hi)
                               for lo, hi in zip(edges[:-1], edges[1:])))
    r = np.concatenate(r_nodes)
    wr = np.concatenate(r_weights) * r * r

    mu, wmu = _gauss_legendre(n_mu, -1.0, 1.0)
    sin_theta = np.sqrt(1.0 - mu * mu)
    if axisymmetric:
        phi = np.zeros(1)
        wphi = np.full(1, 2.0 * math.pi)
    else:
        phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
        wphi = np.full(n_phi, 2.0 * math.pi / n_phi)

    # angular grid once, radial shells in chunks
    ux = (sin_theta[:, None] * np.cos(phi)[None, :]).ravel()
    uy = (sin_theta[:, None] * np.sin(phi)[None, :]).ravel()
    uz = np.repeat(mu, phi.size)
    wang = (wmu[:, None] * wphi[None, :]).ravel()

    total = 0.0
    chunk = max(1, 200_000 // ux.size)
    for start in range(0, r.size, chunk):
        rr = r[start:start + chunk, None]
        values = f(rr * ux, rr * uy, rr * uz)
        total += np.sum(wr[start:start + chunk, None] * wang[None, :] * values)
    return total, r.size * ux.size


def integrate_3d(f: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray],
                 params: Optional[PacketParams] = None,
                 tol: Optional[ToleranceConfig] = None,
                 *,
                 t: float = 0.0,
                 axisymmetric: bool = False,
                 radius: Optional[float] = None) -> QuadratureResult:
    """
    Integrate a vectorised f(x, y, z) over all space.

    With `params` the truncation radius comes from the packet's decay;
    otherwise it is found by probing f along a few directions.
    """
    tol = tol or ToleranceConfig.quadrature_3d()
    if radius is None:
        radius = (truncation_radius(params, t, tol.abs_tol) if params is not None
                  else _probe_radius(f, tol.abs_tol))

    dims = ("r", "mu") if axisymmetric else ("r", "mu", "phi")
    resolution = {"r": 8, "mu": 16, "phi": 16}
    cache = {}
    evals = 0

    def rule(res):
        nonlocal evals
        key = (res["r"], res["mu"], res["phi"])
        if key not in cache:
            cache[key], n = _spherical_rule(f, radius, *key, axisymmetric)
            evals += n
        return cache[key]

    while True:
        current = rule(resolution)
        target = max(tol.abs_tol, tol.rel_tol * abs(current))
        # each dimension's error: change against the same rule at half its resolution
        changes = {dim: abs(current - rule({**resolution, dim: resolution[dim] // 2})) for dim in dims}
        unresolved = [dim for dim in dims if changes[dim] > target]
        logger.debug(f"integrate_3d R={radius:.3g} resolution={resolution}: {current!r} "
                     f"(changes {', '.join(f'{d}={c:.2e}' for d, c in changes.items())})")
        if not unresolved:
            value = float(current) if np.isrealobj(current) else complex(current)
            return QuadratureResult(value=value, error_estimate=float(max(changes.values())),
                                    evaluations=evals)
        if evals > tol.max_evals:
            raise QuadratureError(
                f"integrate_3d not converged after {evals} evaluations "
                f"(unresolved {unresolved}, target {target:.3e})")
        for dim in unresolved:
            resolution[dim] *= 2
