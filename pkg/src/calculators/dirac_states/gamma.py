# src/calculators/dirac_states/gamma.py
"""Weyl (chiral) representation constants, signature (+, -, -, -)."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

IDENTITY2 = np.eye(2, dtype=np.complex128)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = np.array(matrix, dtype=np.complex128)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class GammaAlgebra:
    gamma: Tuple[np.ndarray, ...]        # gamma^0..gamma^3
    sigma: Tuple[np.ndarray, ...]        # {I, sigma_i}
    sigma_tilde: Tuple[np.ndarray, ...]  # {I, -sigma_i}
    gamma5: np.ndarray
    spin_z: np.ndarray                   # Sigma_z = diag(sigma_z, sigma_z)
    spin_x: np.ndarray                   # Sigma_x = diag(sigma_x, sigma_x)

    def current_matrices(self) -> Tuple[np.ndarray, ...]:
        """gamma^0 gamma^mu, so that j^mu = Psi^dagger (gamma^0 gamma^mu) Psi."""
        return tuple(_frozen(self.gamma[0] @ g) for g in self.gamma)


@lru_cache(maxsize=1)
def gamma_algebra() -> GammaAlgebra:
    zero = np.zeros((2, 2), dtype=np.complex128)
    gamma0 = np.block([[zero, IDENTITY2], [IDENTITY2, zero]])
    gammas = [gamma0] + [np.block([[zero, -s], [s, zero]]) for s in PAULI]
    gamma5 = 1j * gammas[0] @ gammas[1] @ gammas[2] @ gammas[3]
    return GammaAlgebra(
        gamma=tuple(_frozen(g) for g in gammas),
        sigma=(_frozen(IDENTITY2),) + tuple(_frozen(s) for s in PAULI),
        sigma_tilde=(_frozen(IDENTITY2),) + tuple(_frozen(-s) for s in PAULI),
        gamma5=_frozen(gamma5),
        spin_z=_frozen(np.block([[PAULI[2], zero], [zero, PAULI[2]]])),
        spin_x=_frozen(np.block([[PAULI[0], zero], [zero, PAULI[0]]])),
    )
