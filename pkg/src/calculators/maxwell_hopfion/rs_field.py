# src/calculators/maxwell_hopfion/rs_field.py
"""
Riemann-Silberstein vector of the electromagnetic hopfion and the
quantities derived from it.

    F = x_+^l / s^{2l+6} (t_+^2 - x_+^2, i (t_+^2 + x_+^2), -2 t_+ x_+)
    t_+ = t + z - i a,   x_+ = x + i y,   s^2 = r^2 + (a + i t)^2

The Poynting velocity of this F is the z-mirror of the closed-form
velocity field (see `mirror_z`).
"""
import logging
import math

import numpy as np

from src.calculators.kg_fields.fields import complex_radius_arrays
from src.calculators.numerics_kernel.richardson import AXES, default_step, partial_derivative
from src.models.fields import EMSample, RSVector
from src.models.packet import SpaceTimePoint
from src.utils.errors import DegeneratePointError, DomainError

logger = logging.getLogger(__name__)

EPS = 1e-300
DEGENERATE_FRACTION = 1e-14


def _check_size(a: float):
    if not a > 0:
        raise DomainError(f"packet size must be positive, got a={a}")


# ----- field ------------------------------------------------------------ #
def rs_vector_arrays(x, y, z, t, a: float, l: int) -> np.ndarray:
    """F components on a trailing axis of length 3."""
    _check_size(a)
    s = complex_radius_arrays(x, y, z, t, a)
    t_plus = np.asarray(t, dtype=float) + np.asarray(z, dtype=float) - 1j * a
    x_plus = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    prefactor = x_plus ** l / s ** (2 * l + 6)
    return np.stack(np.broadcast_arrays(
        prefactor * (t_plus ** 2 - x_plus ** 2),
        prefactor * 1j * (t_plus ** 2 + x_plus ** 2),
        prefactor * (-2.0 * t_plus * x_plus),
    ), axis=-1)


def rs_vector(p: SpaceTimePoint, a: float, l: int) -> RSVector:
    return RSVector(*(complex(c) for c in rs_vector_arrays(p.x, p.y, p.z, p.t, a, l)))


def derived_em(F: RSVector, u_floor: float = 0.0) -> EMSample:
    """
    E = sqrt(2) Re F, B = sqrt(2) Im F, u = |F|^2, P = E x B, vM = P / u.
    `u_floor` is the degenerate-point threshold for the velocity.
    """
    vec = F.as_array()
    E = math.sqrt(2.0) * vec.real
    B = math.sqrt(2.0) * vec.imag
    u = float(np.sum(np.abs(vec) ** 2))
    P = np.cross(E, B)
    if not u > u_floor or u == 0.0:
        raise DegeneratePointError(f"energy density {u:.3e} at or below {u_floor:.3e}")
    vM = P / u
    return EMSample(E=tuple(E), B=tuple(B), P=tuple(P), u=u, vM=tuple(vM))


def rs_velocity_arrays(x, y, z, t, a: float, l: int) -> np.ndarray:
    """Poynting velocity Im(conj(F) x F) / |F|^2 (NaN where F = 0)."""
    F = rs_vector_arrays(x, y, z, t, a, l)
    P = np.cross(np.conj(F), F).imag
    u = np.sum(np.abs(F) ** 2, axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        return P / u[..., None]


# ----- closed-form velocity -------------------------------------------------- #
def w_vector_arrays(x, y, z, t, a: float):
    x, y, z, t = (np.asarray(c, dtype=float) for c in (x, y, z, t))
    r2 = x * x + y * y + z * z
    return np.stack(np.broadcast_arrays(
        2.0 * x * (t - z) - 2.0 * a * y,
        2.0 * y * (t - z) + 2.0 * a * x,
        r2 - a * a - t * t + 2.0 * z * (t - z),
    ), axis=-1), a * a + r2 + t * t - 2.0 * z * t


def velocity_maxwell_arrays(x, y, z, t, a: float) -> np.ndarray:
    _check_size(a)
    w, denominator = w_vector_arrays(x, y, z, t, a)
    return w / denominator[..., None]


def velocity_maxwell(p: SpaceTimePoint, a: float) -> np.ndarray:
    """v_M = w / (a^2 + r^2 + t^2 - 2 z t), independent of l."""
    return velocity_maxwell_arrays(p.x, p.y, p.z, p.t, a)


def mirror_z(p: SpaceTimePoint, a: float) -> np.ndarray:
    """diag(1, 1, -1) v_M(x, y, -z, t); equals the Poynting velocity of F."""
    v = velocity_maxwell(SpaceTimePoint(p.x, p.y, -p.z, p.t), a)
    return v * np.array([1.0, 1.0, -1.0])


# ----- Maxwell equations ------------------------------------------------------ #
def maxwell_residual(p: SpaceTimePoint, a: float, l: int) -> float:
    """
    Residuals of i d_t F = curl F and div F = 0; returns the larger one.
    The evolution residual is relative to |d_t F| + |d_x F| + |d_y F| + |d_z F|,
    the divergence relative to |d_x F_x| + |d_y F_y| + |d_z F_z|. F is massless,
    so there is no m |F| scale to use instead.
    """
    field = lambda q: rs_vector_arrays(q.x, q.y, q.z, q.t, a, l)
    h0 = default_step(a)
    d = {axis: np.asarray(partial_derivative(field, p, axis, h0=h0).value) for axis in AXES}
    curl = np.array([d["y"][2] - d["z"][1], d["z"][0] - d["x"][2], d["x"][1] - d["y"][0]])
    lhs = 1j * d["t"]
    scale = (np.linalg.norm(d["t"]) + np.linalg.norm(d["x"])
             + np.linalg.norm(d["y"]) + np.linalg.norm(d["z"]) + EPS)
    evolution = float(np.linalg.norm(lhs - curl) / scale)
    divergence = float(abs(d["x"][0] + d["y"][1] + d["z"][2])
                       / (abs(d["x"][0]) + abs(d["y"][1]) + abs(d["z"][2]) + EPS))
    logger.debug(f"Maxwell residual l={l} at {p}: evolution {evolution:.2e}, divergence {divergence:.2e}")
    return max(evolution, divergence)


def rs_rotation_phases(p: SpaceTimePoint, a: float, l: int, phi: float) -> np.ndarray:
    """
    Ratios of F_x + i F_y, F_x - i F_y and F_z at the z-rotated point to
    their values at p. For total angular momentum l + 1 these are
    exp(i (l+2) phi), exp(i l phi), exp(i (l+1) phi).
    """
    c, s = math.cos(phi), math.sin(phi)
    rotated = SpaceTimePoint(c * p.x - s * p.y, s * p.x + c * p.y, p.z, p.t)

    def helicity(q):
        F = rs_vector_arrays(q.x, q.y, q.z, q.t, a, l)
        return np.array([F[0] + 1j * F[1], F[0] - 1j * F[1], F[2]])

    before, after = helicity(p), helicity(rotated)
    if np.any(np.abs(before) < EPS):
        raise DegeneratePointError(f"a helicity component vanishes at {p}")
    return after / before
