# src/calculators/dynamics/profile.py
import logging

import numpy as np

from src.calculators.dirac_states.current import charge_density_arrays
from src.models.dynamics import ChargeProfile
from src.models.grid import GridSpec
from src.models.packet import BispinorKind, PacketParams
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)


def charge_profile(kind: BispinorKind, params: PacketParams, grid: GridSpec,
                   t: float = 0.0) -> ChargeProfile:
    """j0 of the (possibly boosted) state on the x-z plane at y = 0."""
    if grid.names != ("x", "z"):
        raise DomainError(f"a charge profile needs an x-z grid, got axes {grid.names}")
    x, z = (axis.values for axis in grid.axes)
    xx, zz = np.meshgrid(x, z, indexing="ij")
    j0 = charge_density_arrays(kind, xx, 0.0, zz, t, params)
    logger.debug(f"charge profile {kind.value} v={params.v}: peak {np.max(j0):.6g} on {grid.shape}")
    return ChargeProfile(x=x, z=z, j0=j0, t=t)


def grid_charge(profile: ChargeProfile) -> float:
    """
    Total charge from the profile, using axial symmetry: each grid column
    at |x| stands for a ring of circumference 2 pi |x|, seen twice on a
    grid symmetric in x.
    """
    dx = profile.x[1] - profile.x[0]
    dz = profile.z[1] - profile.z[0]
    ring = np.pi * np.abs(profile.x)[:, None]
    return float(np.sum(ring * profile.j0) * dx * dz)
