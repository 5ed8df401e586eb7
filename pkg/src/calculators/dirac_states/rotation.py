# src/calculators/dirac_states/rotation.py
import numpy as np

from src.calculators.dirac_states.bispinor import bispinor_field
from src.calculators.dirac_states.gamma import gamma_algebra
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint


def spinor_rotation_pi_x() -> np.ndarray:
    """exp(-i pi Sigma_x / 2) = -i Sigma_x."""
    return -1j * np.asarray(gamma_algebra().spin_x)


def rotate_pi_x(kind: BispinorKind, params: PacketParams, field=None, normalized: bool = False):
    """
    Field rotated by 180 degrees about x: Psi'(p) = S Psi(R^-1 p) with
    R: (x, y, z) -> (x, -y, -z). Pass `field` to rotate an already
    transformed field again.
    """
    source = field if field is not None else bispinor_field(kind, params, normalized)
    spin = spinor_rotation_pi_x()

    def rotated(p: SpaceTimePoint) -> np.ndarray:
        return spin @ np.asarray(source(SpaceTimePoint(p.x, -p.y, -p.z, p.t)))

    return rotated
