# src/calculators/dynamics/momentum.py
"""
Momentum-space description of the rest-frame states.

The printed (symmetric) density of a state with winding n is

    rho_s(p) = pi N^2 / m^{2n+2} (p_x^2 + p_y^2)^n exp(-2 a E),   E = sqrt(m^2 + p^2)

and the squared modulus of the momentum bispinor (the spin-weighted density)
is rho_s (E -+ p_z)/E. Both integrate to one. Every expectation value below
reduces to a radial integral

    I_k[g] = int_0^inf p^{2n+2+k} g(E) exp(-2 a (E - m)) dp

times an angular factor c_n = int (1 - mu^2)^n dmu = 2^{2n+1} (n!)^2 / (2n+1)!,
with the exp(-2am) scaling cancelled against e^z-scaled K.
"""
import logging
import math
from typing import Callable, Sequence

import numpy as np

from src.calculators.dirac_states.normalization import effective_winding, normalization_constant
from src.calculators.numerics_kernel.bessel import bessel_k_scaled
from src.calculators.numerics_kernel.quadrature import integrate_1d
from src.models.dynamics import MomentumMoments
from src.models.numerics import ToleranceConfig
from src.models.packet import BispinorKind, PacketParams
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

DENSITY_CONVENTIONS = ("symmetric", "spin_weighted")
MOMENTUM_TOLERANCE = ToleranceConfig(rel_tol=1e-11, abs_tol=1e-14)


def _rest_frame(params: PacketParams):
    if params.v != 0:
        raise DomainError("momentum-space quantities are defined in the rest frame (v = 0)")


def angular_factor(n: int) -> float:
    return 2.0 ** (2 * n + 1) * math.factorial(n) ** 2 / math.factorial(2 * n + 1)


def _spin_sign(kind: BispinorKind) -> int:
    """-1 where the weight is (E - p_z)/E, +1 where it is (E + p_z)/E."""
    return -1 if kind in (BispinorKind.PSI_PLUS, BispinorKind.PHI_MINUS) else 1


# ----- pointwise ------------------------------------------------------------ #
def momentum_density(kind: BispinorKind, params: PacketParams, p_vec: Sequence[float],
                     convention: str = "symmetric") -> float:
    _rest_frame(params)
    if convention not in DENSITY_CONVENTIONS:
        raise DomainError(f"density convention must be one of {DENSITY_CONVENTIONS}, got '{convention}'")
    px, py, pz = (float(c) for c in p_vec)
    m, a = params.m, params.a
    n = effective_winding(kind, params.l)
    energy = math.sqrt(m * m + px * px + py * py + pz * pz)
    n2 = normalization_constant(kind, params).N ** 2
    density = math.pi * n2 / m ** (2 * n + 2) * (px * px + py * py) ** n * math.exp(-2.0 * a * energy)
    if convention == "spin_weighted":
        density *= (energy + _spin_sign(kind) * pz) / energy
    return density


def momentum_wavefunction(kind: BispinorKind, params: PacketParams,
                          p_vec: Sequence[float]) -> np.ndarray:
    """
    Momentum bispinor (up to a global phase); its squared modulus is the
    spin-weighted density.
    """
    _rest_frame(params)
    px, py, pz = (float(c) for c in p_vec)
    m, a = params.m, params.a
    n = effective_winding(kind, params.l)
    energy = math.sqrt(m * m + px * px + py * py + pz * pz)
    p_plus, p_minus = complex(px, py), complex(px, -py)
    spinors = {
        BispinorKind.PSI_PLUS: (1.0, 0.0, (energy - pz) / m, -p_plus / m),
        BispinorKind.PSI_MINUS: ((energy + pz) / m, p_plus / m, 1.0, 0.0),
        BispinorKind.PHI_PLUS: (0.0, 1.0, -p_minus / m, (energy + pz) / m),
        BispinorKind.PHI_MINUS: (p_minus / m, (energy - pz) / m, 0.0, 1.0),
    }
    n2 = normalization_constant(kind, params).N ** 2
    amplitude = (math.sqrt(math.pi * n2 / m ** (2 * n + 2)) * p_plus ** n
                 * math.exp(-a * energy) * m / (math.sqrt(2.0) * energy))
    return amplitude * np.array(spinors[kind], dtype=np.complex128)


# ----- radial integrals ---------------------------------------------------------- #
def _radial_integral(n: int, params: PacketParams, extra_power: int,
                     weight: Callable[[float], float], tol: ToleranceConfig) -> float:
    m, a = params.m, params.a

    def integrand(p):
        energy = math.sqrt(m * m + p * p)
        return p ** (2 * n + 2 + extra_power) * weight(energy) * math.exp(-2.0 * a * p * p / (energy + m))

    return float(integrate_1d(integrand, 0.0, math.inf, tol, decay=2.0 * a).value)


def _scaled_inverse_norm(n: int, params: PacketParams) -> float:
    """N^-2 with K_{n+2}(2am) replaced by its e^{2am}-scaled value."""
    am = params.a * params.m
    k = float(np.real(bessel_k_scaled(n + 2, 2.0 * am)))
    return 2.0 * params.m * math.pi ** 2 * math.factorial(n) * k / am ** (n + 1)


def momentum_norm(kind: BispinorKind, params: PacketParams,
                  tol: ToleranceConfig = MOMENTUM_TOLERANCE) -> float:
    """Integral of the momentum density over all p; equals 1."""
    _rest_frame(params)
    n = effective_winding(kind, params.l)
    radial = _radial_integral(n, params, 0, lambda e: 1.0, tol)
    total = (2.0 * math.pi ** 2 * angular_factor(n) / params.m ** (2 * n + 2)
             * radial / _scaled_inverse_norm(n, params))
    logger.debug(f"momentum norm of {kind.value} l={params.l}: {total:.15g}")
    return total


def momentum_moments(kind: BispinorKind, params: PacketParams,
                     tol: ToleranceConfig = MOMENTUM_TOLERANCE) -> MomentumMoments:
    _rest_frame(params)
    n = effective_winding(kind, params.l)
    base = _radial_integral(n, params, 0, lambda e: 1.0, tol)
    p2 = _radial_integral(n, params, 2, lambda e: 1.0, tol) / base
    p2_e2 = _radial_integral(n, params, 2, lambda e: 1.0 / (e * e), tol) / base
    # <p_z^2/E>: cos^2 weight gives the factor (c_n - c_{n+1}) / c_n
    pz2_e = (_radial_integral(n, params, 2, lambda e: 1.0 / e, tol) / base
             * (angular_factor(n) - angular_factor(n + 1)) / angular_factor(n))
    return MomentumMoments(norm=momentum_norm(kind, params, tol), p2=p2,
                           pz_spin_weighted=_spin_sign(kind) * pz2_e, p2_over_e2=p2_e2)


def spreading_coefficient_b(kind: BispinorKind, params: PacketParams,
                            tol: ToleranceConfig = MOMENTUM_TOLERANCE) -> float:
    """B = <p^2/E^2>, the t^2 coefficient of the mean square radius."""
    return momentum_moments(kind, params, tol).p2_over_e2


def mean_square_radius_oracle(params: PacketParams, t: float = 0.0,
                              tol: ToleranceConfig = MOMENTUM_TOLERANCE) -> float:
    """
    <r^2>(t) of Psi+ with l = 0 from its momentum bispinor,
    B (a^2 + t^2) + <(3 - p^2/E^2) / (2 E^2)>.
    """
    _rest_frame(params)
    if params.l != 0:
        raise DomainError("the closed momentum-space radius is derived for l = 0 only")
    base = _radial_integral(0, params, 0, lambda e: 1.0, tol)
    b = _radial_integral(0, params, 2, lambda e: 1.0 / (e * e), tol) / base
    m2 = params.m ** 2
    correction = _radial_integral(
        0, params, 0, lambda e: (3.0 - (e * e - m2) / (e * e)) / (2.0 * e * e), tol) / base
    return b * (params.a ** 2 + t * t) + correction
