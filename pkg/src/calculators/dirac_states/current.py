# src/calculators/dirac_states/current.py
"""
Probability four-current j^mu = Psi-bar gamma^mu Psi.

Two paths: the bilinear form for every kind, and for Psi+/Psi- the closed
form (sign sigma = +1 / -1, kappa = -i (q_t + sigma q_z),
h = N^2 rho^{2l} |G_{l+2}|^2, F0 = N^2 |f_l|^2):

    j0 = F0 + (rho^2 + |kappa|^2) h
    jx = -2 Im(conj(kappa) X) h
    jy =  2 Re(conj(kappa) X) h
    jz = sigma [F0 + (rho^2 - |kappa|^2) h]
"""
import numpy as np

from src.calculators.dirac_states.bispinor import bispinor_arrays
from src.calculators.dirac_states.gamma import gamma_algebra
from src.calculators.dirac_states.normalization import normalization_constant
from src.calculators.kg_fields.fields import q_vector_arrays, radial_table
from src.models.fields import FourCurrent
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.utils.errors import DomainError

PATHS = ("bilinear", "closed_form")


def bilinear_current(psi: np.ndarray) -> np.ndarray:
    """(j0, jx, jy, jz) on a trailing axis from bispinor components."""
    mats = gamma_algebra().current_matrices()
    conj = np.conj(psi)
    return np.stack([np.einsum("...i,ij,...j->...", conj, mat, psi).real for mat in mats], axis=-1)


def closed_form_current_arrays(kind: BispinorKind, x, y, z, t, params: PacketParams,
                               normalized: bool = True) -> np.ndarray:
    if kind.is_phi:
        raise DomainError("the closed-form current exists for Psi+ and Psi- only")
    sign = kind.sign
    l = params.l
    X, _, G = radial_table(x, y, z, t, params, l + 2)
    q_t, _, _, q_z = q_vector_arrays(x, y, z, t, params.a, params.v)
    norm2 = normalization_constant(kind, params).N ** 2 if normalized else 1.0

    rho2 = np.abs(X) ** 2
    kappa = -1j * (q_t + sign * q_z)
    kappa2 = np.abs(kappa) ** 2
    h = norm2 * rho2 ** l * np.abs(G[..., l + 2]) ** 2
    f0 = norm2 * np.abs(X ** l * G[..., l + 1]) ** 2
    cross = np.conj(kappa) * X

    return np.stack(np.broadcast_arrays(
        f0 + (rho2 + kappa2) * h,
        -2.0 * cross.imag * h,
        2.0 * cross.real * h,
        sign * (f0 + (rho2 - kappa2) * h),
    ), axis=-1)


def four_current_arrays(kind: BispinorKind, x, y, z, t, params: PacketParams,
                        normalized: bool = True, path: str = "bilinear") -> np.ndarray:
    if path == "bilinear":
        return bilinear_current(bispinor_arrays(kind, x, y, z, t, params, normalized))
    if path == "closed_form":
        return closed_form_current_arrays(kind, x, y, z, t, params, normalized)
    raise DomainError(f"current path must be one of {PATHS}, got '{path}'")


def four_current(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
                 path: str = "bilinear", normalized: bool = True) -> FourCurrent:
    j = four_current_arrays(kind, p.x, p.y, p.z, p.t, params, normalized, path)
    return FourCurrent(*(float(c) for c in j))


def charge_density_arrays(kind: BispinorKind, x, y, z, t, params: PacketParams,
                          normalized: bool = True) -> np.ndarray:
    """j0 = |Psi|^2 without forming the spatial components."""
    psi = bispinor_arrays(kind, x, y, z, t, params, normalized)
    return np.sum(np.abs(psi) ** 2, axis=-1)
