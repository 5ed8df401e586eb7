# src/calculators/kg_fields/fields.py
"""
Klein-Gordon generating fields.

    s^2  = x^2 + y^2 + z^2 - t^2 + a^2 + 2 i a gamma (t - v z)
    G_nu = m K_nu(m s) / s^nu
    f_l  = X^l G_{l+1},            X = x + i y

Derivatives use d G_nu / dx^mu = -m q_mu G_{nu+1} with
q = (q_t, q_x, q_y, q_z) = (-t + i a gamma, x, y, z - i a gamma v), which
is half the gradient of s^2.

Every *_arrays function broadcasts over numpy arrays; the point functions
are thin wrappers taking a SpaceTimePoint.
"""
import logging
from typing import Tuple

import numpy as np

from src.calculators.numerics_kernel.bessel import bessel_k_table
from src.models.packet import PacketParams, SpaceTimePoint
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

MASSLESS_FORMS = ("direct", "raised")


# ----- complex radius ---------------------------------------------------- #
def radius_squared_arrays(x, y, z, t, a: float, v: float = 0.0):
    gamma = 1.0 / np.sqrt(1.0 - v * v)
    x, y, z, t = (np.asarray(c, dtype=float) for c in (x, y, z, t))
    return x * x + y * y + z * z - t * t + a * a + 2j * a * gamma * (t - v * z)


def complex_radius_arrays(x, y, z, t, a: float, v: float = 0.0):
    """Principal root of s^2; rejects the closed negative real axis."""
    s2 = radius_squared_arrays(x, y, z, t, a, v)
    on_cut = (s2.imag == 0.0) & (s2.real <= 0.0)
    if np.any(on_cut):
        raise DomainError("complex radius on the branch cut (t = v z with r^2 + a^2 <= t^2)")
    return np.sqrt(s2)


def complex_radius(p: SpaceTimePoint, params: PacketParams) -> complex:
    """s at an event; Re s > 0 on the whole operating domain."""
    return complex(complex_radius_arrays(p.x, p.y, p.z, p.t, params.a, params.v))


def q_vector_arrays(x, y, z, t, a: float, v: float = 0.0):
    """Half-gradient of s^2 as (q_t, q_x, q_y, q_z)."""
    gamma = 1.0 / np.sqrt(1.0 - v * v)
    x, y, z, t = (np.asarray(c, dtype=float) for c in (x, y, z, t))
    return (-t + 1j * a * gamma, x + 0j, y + 0j, z - 1j * a * gamma * v)


def radial_table(x, y, z, t, params: PacketParams, nu_max: int):
    """
    Return (X, s, G) with G[..., nu] = m K_nu(m s) / s^nu for nu = 0..nu_max.
    """
    s = complex_radius_arrays(x, y, z, t, params.a, params.v)
    ms = params.m * s
    scaled = bessel_k_table(nu_max, ms)
    decay = np.exp(-ms)
    powers = s[..., None] ** np.arange(nu_max + 1)
    G = params.m * scaled * decay[..., None] / powers
    X = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    return X, s, G


# ----- scalar field ---------------------------------------------------------- #
def scalar_field_arrays(x, y, z, t, params: PacketParams, l: int = None):
    n = params.l if l is None else l
    X, _, G = radial_table(x, y, z, t, params, n + 1)
    return X ** n * G[..., n + 1]


def scalar_field(p: SpaceTimePoint, params: PacketParams) -> complex:
    """f_l = (x+iy)^l m K_{l+1}(ms) / s^{l+1} (boosted s when v != 0)."""
    return complex(scalar_field_arrays(p.x, p.y, p.z, p.t, params))


def scalar_gradient_arrays(x, y, z, t, params: PacketParams, l: int = None):
    """(d_t, d_x, d_y, d_z) f_n as a tuple of arrays."""
    n = params.l if l is None else l
    X, _, G = radial_table(x, y, z, t, params, n + 2)
    q_t, q_x, q_y, q_z = q_vector_arrays(x, y, z, t, params.a, params.v)
    m = params.m
    tail = -m * X ** n * G[..., n + 2]
    lead = n * X ** (n - 1) * G[..., n + 1] if n > 0 else 0.0
    return (q_t * tail,
            lead + q_x * tail,
            1j * lead + q_y * tail,
            q_z * tail)


def scalar_gradient(p: SpaceTimePoint, params: PacketParams) -> Tuple[complex, complex, complex, complex]:
    """Analytic four-gradient (d_t f_l, d_x f_l, d_y f_l, d_z f_l)."""
    return tuple(complex(c) for c in scalar_gradient_arrays(p.x, p.y, p.z, p.t, params))


# ----- massless generator ------------------------------------------------------ #
def _massless_power(l: int, form: str) -> int:
    if form not in MASSLESS_FORMS:
        raise DomainError(f"massless form must be one of {MASSLESS_FORMS}, got '{form}'")
    return l + 2 if form == "direct" else 2 * l + 2


def scalar_field_massless_arrays(x, y, z, t, a: float, l: int, form: str = "direct"):
    k = _massless_power(l, form)
    s = complex_radius_arrays(x, y, z, t, a)
    X = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    return X ** l / s ** k


def scalar_field_massless(p: SpaceTimePoint, a: float, l: int, form: str = "direct") -> complex:
    """
    Massless generator X^l / s^k.

    form="direct": k = l + 2, the printed generator (a d'Alembert solution for l = 0 only).
    form="raised": k = 2l + 2, the m -> 0 limit of m^l f_l / (l! 2^l), a solution for every l.
    """
    if not a > 0:
        raise DomainError(f"packet size must be positive, got a={a}")
    return complex(scalar_field_massless_arrays(p.x, p.y, p.z, p.t, a, l, form))


def massless_gradient_arrays(x, y, z, t, a: float, l: int, form: str = "direct"):
    k = _massless_power(l, form)
    s = complex_radius_arrays(x, y, z, t, a)
    X = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    q_t, q_x, q_y, q_z = q_vector_arrays(x, y, z, t, a)
    tail = -k * X ** l / s ** (k + 2)
    lead = l * X ** (l - 1) / s ** k if l > 0 else 0.0
    return (q_t * tail, lead + q_x * tail, 1j * lead + q_y * tail, q_z * tail)
