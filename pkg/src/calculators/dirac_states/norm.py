# src/calculators/dirac_states/norm.py
import logging

from src.calculators.dirac_states.current import charge_density_arrays
from src.calculators.numerics_kernel.quadrature import integrate_3d
from src.models.numerics import QuadratureResult, ToleranceConfig
from src.models.packet import BispinorKind, PacketParams
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


def total_charge(kind: BispinorKind, params: PacketParams, t: float = 0.0,
                 tol: ToleranceConfig = None, normalized: bool = True) -> QuadratureResult:
    """Integral of j0 over space at time t (boosted states included)."""
    density = lambda x, y, z: charge_density_arrays(kind, x, y, z, t, params, normalized)
    result = integrate_3d(density, params, tol or ToleranceConfig.quadrature_3d(),
                          t=t, axisymmetric=True)
    logger.info(f"charge of {kind.value} {params.to_dict()} at t={t}: "
                f"{result.value:.12g} (+/- {result.error_estimate:.1e})")
    return result


def norm_integral(kind: BispinorKind, params: PacketParams,
                  tol: ToleranceConfig = None) -> float:
    """Integral of j0 at t = 0 for the normalised rest-frame state; equals 1."""
    if params.v != 0:
        raise DomainError("norm_integral is defined in the rest frame; use total_charge for boosts")
    return float(total_charge(kind, params, 0.0, tol).value)
