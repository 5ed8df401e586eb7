# src/calculators/dirac_states/bispinor.py
"""
The four bispinors generated from f_n (n = l for Psi, n = l + 1 for Phi).

With core = X^n G_{n+2}, kappa_pm = -i (q_t +/- q_z) and
low = (d_x - i d_y) f_n:

    Psi+ = ( f_n,              0,                 kappa_+ core,   -i f_{n+1} )
    Psi- = ( kappa_- core,     i f_{n+1},         f_n,             0         )
    Phi+ = ( 0,                f_n,               (i/m) low,       kappa_- core )
    Phi- = ( -(i/m) low,       kappa_+ core,      0,               f_n       )

The printed entries (a + it -/+ iz) f_{n+1} / X are used in the regular form
kappa core, so nothing is divided by X on the z axis.
"""
import numpy as np

from src.calculators.dirac_states.normalization import effective_winding, normalization_constant
from src.calculators.kg_fields.fields import q_vector_arrays, radial_table
from src.models.fields import Bispinor
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint


def bispinor_arrays(kind: BispinorKind, x, y, z, t, params: PacketParams,
                    normalized: bool = False) -> np.ndarray:
    """Components stacked on a trailing axis of length 4."""
    n = effective_winding(kind, params.l)
    X, _, G = radial_table(x, y, z, t, params, n + 2)
    q_t, _, _, q_z = q_vector_arrays(x, y, z, t, params.a, params.v)

    f_n = X ** n * G[..., n + 1]
    f_next = X ** (n + 1) * G[..., n + 2]
    core = X ** n * G[..., n + 2]
    kappa_plus = -1j * (q_t + q_z) * core
    kappa_minus = -1j * (q_t - q_z) * core
    zero = np.zeros_like(f_n)

    if kind is BispinorKind.PSI_PLUS:
        comps = (f_n, zero, kappa_plus, -1j * f_next)
    elif kind is BispinorKind.PSI_MINUS:
        comps = (kappa_minus, 1j * f_next, f_n, zero)
    else:
        lead = 2 * n * X ** (n - 1) * G[..., n + 1] if n > 0 else 0.0
        low = lead - params.m * np.conj(X) * core
        if kind is BispinorKind.PHI_PLUS:
            comps = (zero, f_n, (1j / params.m) * low, kappa_minus)
        else:
            comps = (-(1j / params.m) * low, kappa_plus, zero, f_n)

    psi = np.stack(np.broadcast_arrays(*comps), axis=-1)
    if normalized:
        psi = psi * normalization_constant(kind, params).N
    return psi


def bispinor(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
             normalized: bool = True) -> Bispinor:
    return Bispinor(bispinor_arrays(kind, p.x, p.y, p.z, p.t, params, normalized))


def bispinor_field(kind: BispinorKind, params: PacketParams, normalized: bool = True):
    """Point -> components callable, the form every check consumes."""
    def field(p: SpaceTimePoint) -> np.ndarray:
        return bispinor_arrays(kind, p.x, p.y, p.z, p.t, params, normalized)
    return field
