# src/calculators/topology/velocity.py
"""
Velocity fields and the Hopf map.

    v_D = (w + Q_l e_z) / (a^2 + r^2 + t^2 - 2 t z + Q_l)
    Q_l = |s K_{l+1}(m s) / K_{l+2}(m s)|^2
    v_M = w / (a^2 + r^2 + t^2 - 2 t z)

Both share Upsilon = (v_x + i v_y) / (1 - v_z) = (x + i y) / (t - z - i a),
whose level sets at fixed t are straight lines.
"""
import logging
from typing import Sequence, Tuple

import numpy as np

from src.calculators.kg_fields.fields import complex_radius_arrays
from src.calculators.maxwell_hopfion.rs_field import velocity_maxwell_arrays, w_vector_arrays
from src.calculators.numerics_kernel.bessel import bessel_k_table
from src.models.fields import HopfValue
from src.models.packet import PacketParams, SpaceTimePoint
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

INFINITY_GAP = 1e-15


def _rest_frame(params: PacketParams):
    if params.v != 0.0:
        raise DomainError("the velocity closed form is for the rest frame (v = 0); "
                          "use the boosted current instead")


def q_factor_arrays(x, y, z, t, params: PacketParams):
    """Q_l from the e^z-scaled table; the scaling cancels in the ratio."""
    _rest_frame(params)
    s = complex_radius_arrays(x, y, z, t, params.a)
    table = bessel_k_table(params.l + 2, params.m * s)
    ratio = s * table[..., params.l + 1] / table[..., params.l + 2]
    return np.abs(ratio) ** 2


def velocity_dirac_arrays(x, y, z, t, params: PacketParams) -> np.ndarray:
    w, denominator = w_vector_arrays(x, y, z, t, params.a)
    q = q_factor_arrays(x, y, z, t, params)
    w = w.copy()
    w[..., 2] += q
    return w / (denominator + q)[..., None]


def velocity_dirac(p: SpaceTimePoint, params: PacketParams) -> np.ndarray:
    return velocity_dirac_arrays(p.x, p.y, p.z, p.t, params)


# ----- Hopf map ------------------------------------------------------------- #
def hopf_map(v: Sequence[float]) -> HopfValue:
    """Upsilon = (v_x + i v_y) / (1 - v_z); v_z = 1 is the point at infinity."""
    vx, vy, vz = (float(c) for c in v)
    if vx * vx + vy * vy + vz * vz > 1.0 + 1e-9:
        raise DomainError(f"|v| must not exceed 1, got {np.sqrt(vx * vx + vy * vy + vz * vz):.12g}")
    gap = 1.0 - vz
    if gap <= INFINITY_GAP:
        return HopfValue(None)
    return HopfValue(complex(vx, vy) / gap)


def hopf_map_arrays(v: np.ndarray) -> np.ndarray:
    """Vectorised map; the point at infinity comes back as complex inf."""
    v = np.asarray(v, dtype=float)
    gap = 1.0 - v[..., 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (v[..., 0] + 1j * v[..., 1]) / gap
    return np.where(gap <= INFINITY_GAP, complex(np.inf, np.inf), out)


def hopf_closed_form_arrays(x, y, z, t, a: float):
    x, y, z, t = (np.asarray(c, dtype=float) for c in (x, y, z, t))
    return (x + 1j * y) / (t - z - 1j * a)


def hopf_closed_form(p: SpaceTimePoint, a: float) -> complex:
    return complex(hopf_closed_form_arrays(p.x, p.y, p.z, p.t, a))


def hopf_level_line(upsilon: complex, t: float, a: float,
                    z_range: Tuple[float, float] = (-5.0, 5.0), n: int = 101) -> np.ndarray:
    """
    Points (x, y, z) of the straight level line Upsilon = const at time t:
    x = (t - z) Re U + a Im U,  y = (t - z) Im U - a Re U.
    """
    if upsilon is None or not np.isfinite(complex(upsilon)):
        raise DomainError("level lines exist for finite Upsilon only")
    if not a > 0:
        raise DomainError(f"packet size must be positive, got a={a}")
    z_lo, z_hi = z_range
    if not z_lo < z_hi or n < 2:
        raise DomainError(f"invalid z range {z_range} with {n} points")
    upsilon = complex(upsilon)
    z = np.linspace(z_lo, z_hi, n)
    x = (t - z) * upsilon.real + a * upsilon.imag
    y = (t - z) * upsilon.imag - a * upsilon.real
    return np.column_stack([x, y, z])


def velocity_gap(p: SpaceTimePoint, params: PacketParams) -> float:
    """|v_D - v_M| at p; shrinks with the mass."""
    v_d = velocity_dirac(p, params)
    v_m = velocity_maxwell_arrays(p.x, p.y, p.z, p.t, params.a)
    return float(np.linalg.norm(v_d - v_m))
