# src/calculators/dirac_states/normalization.py
import logging
import math

from src.calculators.numerics_kernel.bessel import bessel_k
from src.models.fields import NormalizationConstant
from src.models.packet import BispinorKind, PacketParams

logger = logging.getLogger(__name__)


def effective_winding(kind: BispinorKind, l: int) -> int:
    """Phi states are built from f_{l+1}."""
    return l + 1 if kind.is_phi else l


def inverse_norm_squared(l_eff: int, m: float, a: float) -> float:
    """N^-2 = 2 m pi^2 l! K_{l+2}(2am) / (am)^{l+1}."""
    am = a * m
    k = bessel_k(l_eff + 2, 2.0 * am).real
    return 2.0 * m * math.pi ** 2 * math.factorial(l_eff) * k / am ** (l_eff + 1)


def doppler_factor(kind: BispinorKind, v: float) -> float:
    """
    Charge of a boosted state relative to the rest frame is
    sqrt((1-v)/(1+v)) for Psi+ and Phi-, the inverse for Psi- and Phi+.
    Returns the compensating factor for N^2.
    """
    if v == 0:
        return 1.0
    ratio = math.sqrt((1.0 + v) / (1.0 - v))
    return ratio if kind in (BispinorKind.PSI_PLUS, BispinorKind.PHI_MINUS) else 1.0 / ratio


def normalization_constant(kind: BispinorKind, params: PacketParams) -> NormalizationConstant:
    l_eff = effective_winding(kind, params.l)
    doppler = doppler_factor(kind, params.v)
    n_squared = doppler / inverse_norm_squared(l_eff, params.m, params.a)
    return NormalizationConstant(N=math.sqrt(n_squared), l_effective=l_eff, doppler=doppler)
