# src/calculators/kg_fields/oracle.py
import logging
import math

import numpy as np

from src.calculators.numerics_kernel.quadrature import integrate_1d
from src.models.numerics import ToleranceConfig
from src.models.packet import PacketParams, SpaceTimePoint
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


def momentum_oracle(p: SpaceTimePoint, params: PacketParams,
                    tol: ToleranceConfig = None) -> complex:
    """
    f_KG from its momentum-space packet,

        f_KG = (1/r) int_0^inf dk (k/E) sin(k r) exp(-(a + i t) E),   E = sqrt(m^2 + k^2)

    reduced from the 3D integral over exp(i k.r); at r = 0 the kernel
    sin(k r)/r is replaced by its limit k. Only the l = 0 generator is
    represented, whatever params.l says.
    """
    if params.v != 0:
        raise DomainError("momentum_oracle is defined in the rest frame only (v = 0)")
    tol = tol or ToleranceConfig(rel_tol=1e-11, abs_tol=1e-15)
    m, a, t = params.m, params.a, p.t
    r = math.sqrt(p.r2)
    phase = complex(a, t)

    def energy(k):
        return math.sqrt(m * m + k * k)

    if r == 0.0:
        integrand = lambda k: k * k / energy(k) * np.exp(-phase * energy(k))
        result = integrate_1d(integrand, 0.0, math.inf, tol, decay=a)
        return complex(result.value)

    integrand = lambda k: k / energy(k) * math.sin(k * r) * np.exp(-phase * energy(k))
    result = integrate_1d(integrand, 0.0, math.inf, tol, decay=a)
    logger.debug(f"momentum oracle at r={r:.3g}, t={t:.3g}: error {result.error_estimate:.2e}")
    return complex(result.value) / r
