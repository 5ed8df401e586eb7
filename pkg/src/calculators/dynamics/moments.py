# src/calculators/dynamics/moments.py
"""
Position-space moments of the charge density and what is built on them:
the spreading law <r^2>(t) = A/m^2 + B (a^2 + t^2) and the uncertainty
product.
"""
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from src.calculators.dirac_states.current import charge_density_arrays
from src.calculators.dynamics.momentum import momentum_moments
from src.calculators.numerics_kernel.quadrature import integrate_3d
from src.models.dynamics import DELTA_P_CONVENTIONS, MomentResult, SpreadingCoefficients, UncertaintyProduct
from src.models.numerics import ToleranceConfig
from src.models.packet import BispinorKind, PacketParams
from src.utils.errors import DomainError, FitError
from src.utils.linalg import safe_inverse
from src.utils.workers import parallel_map

logger = logging.getLogger(__name__)

MIN_FIT_SAMPLES = 4


def default_time_samples(a: float) -> Tuple[float, ...]:
    return (0.0, 0.5 * a, a, 1.5 * a, 2.0 * a)


def spatial_moment(kind: BispinorKind, params: PacketParams, t: float = 0.0, power: int = 2,
                   tol: Optional[ToleranceConfig] = None) -> MomentResult:
    """int r^power j0(r, t) d^3r for the normalised state."""
    if power <= 0 or power % 2:
        raise DomainError(f"moment power must be a positive even integer, got {power}")
    half = power // 2

    def integrand(x, y, z):
        return (x * x + y * y + z * z) ** half * charge_density_arrays(kind, x, y, z, t, params)

    result = integrate_3d(integrand, params, tol, t=t, axisymmetric=True)
    logger.debug(f"<r^{power}> of {kind.value} at t={t}: {result.value:.12g}")
    return MomentResult(value=float(result.value), error=result.error_estimate, t=t, power=power)


def mean_position(kind: BispinorKind, params: PacketParams, t: float = 0.0,
                  tol: Optional[ToleranceConfig] = None) -> Tuple[float, float, float]:
    """<r>; the transverse components use the full azimuthal rule."""
    def weighted(axis):
        def integrand(x, y, z):
            return (x, y, z)[axis] * charge_density_arrays(kind, x, y, z, t, params)
        return integrand

    mean_x = integrate_3d(weighted(0), params, tol, t=t).value
    mean_y = integrate_3d(weighted(1), params, tol, t=t).value
    mean_z = integrate_3d(weighted(2), params, tol, t=t, axisymmetric=True).value
    return float(mean_x), float(mean_y), float(mean_z)


def spreading_fit(kind: BispinorKind, params: PacketParams,
                  t_samples: Optional[Sequence[float]] = None,
                  tol: Optional[ToleranceConfig] = None, workers: int = 1) -> SpreadingCoefficients:
    """Least-squares fit of <r^2>(t) to c0 + B t^2, with A = m^2 (c0 - B a^2)."""
    times = tuple(float(t) for t in (t_samples if t_samples is not None
                                      else default_time_samples(params.a)))
    if len(times) < MIN_FIT_SAMPLES:
        raise FitError(f"the spreading fit needs at least {MIN_FIT_SAMPLES} times, got {len(times)}")
    squares = np.unique(np.round(np.square(times), 14))
    if len(squares) < 2:
        raise FitError("time samples give fewer than two distinct t^2 values")

    values = np.array([moment.value for moment in parallel_map(
        lambda t: spatial_moment(kind, params, t, 2, tol), times, workers)])

    design = np.column_stack([np.ones(len(times)), np.square(times)])
    try:
        normal_inv = safe_inverse(design.T @ design, ridge=0.0)
    except np.linalg.LinAlgError as err:
        raise FitError(f"spreading fit is ill-conditioned: {err}") from err
    c0, b = normal_inv @ design.T @ values
    residual = float(np.sqrt(np.mean(np.square(design @ np.array([c0, b]) - values)))
                     / np.max(np.abs(values)))
    a_coeff = params.m ** 2 * (c0 - b * params.a ** 2)
    logger.info(f"spreading fit {kind.value} l={params.l} a={params.a}: "
                f"A={a_coeff:.8g} B={b:.8g} residual={residual:.2e}")
    return SpreadingCoefficients(A=float(a_coeff), B=float(b), fit_residual=residual,
                                 t_samples=times, values=tuple(float(v) for v in values))


def uncertainty_product(kind: BispinorKind, params: PacketParams,
                        convention: str = "symmetric",
                        tol: Optional[ToleranceConfig] = None) -> UncertaintyProduct:
    """Delta r Delta p at t = 0, with Delta p reported in both conventions."""
    if params.v != 0:
        raise DomainError("the uncertainty product is defined in the rest frame (v = 0)")
    if convention not in DELTA_P_CONVENTIONS:
        raise DomainError(f"delta-p convention must be one of {DELTA_P_CONVENTIONS}, got '{convention}'")
    r2 = spatial_moment(kind, params, 0.0, 2, tol).value
    center = mean_position(kind, params, 0.0, tol)
    delta_r = math.sqrt(r2 - float(np.dot(center, center)))
    moments = momentum_moments(kind, params)
    delta_p = {name: moments.delta_p(name) for name in DELTA_P_CONVENTIONS}
    product = UncertaintyProduct(delta_r=delta_r, delta_p=delta_p, mean_position=center,
                                 convention=convention)
    logger.info(f"uncertainty {kind.value} l={params.l} a={params.a}: {product.products()}")
    return product
