# src/calculators/dirac_states/checks.py
"""Pointwise verification of the Dirac states: field equations, conservation, eigenvalues."""
import logging
from typing import Callable, Optional

import numpy as np

from src.calculators.dirac_states.bispinor import bispinor_field
from src.calculators.dirac_states.current import bilinear_current
from src.calculators.dirac_states.gamma import gamma_algebra
from src.calculators.numerics_kernel.richardson import AXES, default_step, partial_derivative
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.utils.errors import DegeneratePointError

logger = logging.getLogger(__name__)

EPS = 1e-300
DEGENERATE_THRESHOLD = 1e-150

Field = Callable[[SpaceTimePoint], np.ndarray]


def _field(kind, params, field: Optional[Field]) -> Field:
    return field if field is not None else bispinor_field(kind, params, normalized=False)


def _gradient(field: Field, p: SpaceTimePoint, params: PacketParams):
    h0 = default_step(params.a, params.m, params.gamma)
    return {axis: np.asarray(partial_derivative(field, p, axis, h0=h0).value) for axis in AXES}


def dirac_residual(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
                   field: Optional[Field] = None) -> float:
    """
    Max relative residual of  i sigma^mu d_mu phi = m chi  and
    i sigma~^mu d_mu chi = m phi. Each equation is relative to
    sum_mu |sigma^mu d_mu phi| + m |chi| (tilde analogue for the chi equation).
    """
    field = _field(kind, params, field)
    algebra = gamma_algebra()
    grad = _gradient(field, p, params)
    psi = np.asarray(field(p))
    phi, chi = psi[:2], psi[2:]

    worst = 0.0
    for sigma, block, target in ((algebra.sigma, slice(0, 2), chi),
                                 (algebra.sigma_tilde, slice(2, 4), phi)):
        terms = [1j * (sigma[mu] @ grad[axis][block]) for mu, axis in enumerate(AXES)]
        lhs = sum(terms)
        rhs = params.m * target
        scale = sum(np.linalg.norm(term) for term in terms) + np.linalg.norm(rhs) + EPS
        worst = max(worst, float(np.linalg.norm(lhs - rhs) / scale))
    logger.debug(f"Dirac residual {kind.value} at {p}: {worst:.3e}")
    return worst


def current_conservation_residual(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
                                  field: Optional[Field] = None) -> float:
    """|d_t j0 + div j| relative to the local scale m |j0|."""
    field = _field(kind, params, field)
    current = lambda q: bilinear_current(np.asarray(field(q)))
    h0 = default_step(params.a, params.m, params.gamma)
    divergence = sum(partial_derivative(current, p, axis, h0=h0).value[mu].real
                     for mu, axis in enumerate(AXES))
    j0 = float(current(p)[0].real)
    residual = abs(divergence) / (params.m * abs(j0) + EPS)
    logger.debug(f"conservation residual {kind.value} at {p}: {residual:.3e}")
    return float(residual)


def mz_ratios(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
              field: Optional[Field] = None,
              threshold: float = DEGENERATE_THRESHOLD) -> np.ndarray:
    """
    (M_z Psi)_k / Psi_k for every component, NaN where |Psi_k| <= threshold
    relative to the largest component. M_z = -i (x d_y - y d_x) + Sigma_z / 2.
    """
    field = _field(kind, params, field)
    psi = np.asarray(field(p))
    largest = float(np.max(np.abs(psi)))
    if largest <= DEGENERATE_THRESHOLD:
        raise DegeneratePointError(f"all bispinor components vanish at {p}")
    h0 = default_step(params.a, params.m, params.gamma)
    d_x = np.asarray(partial_derivative(field, p, "x", h0=h0).value)
    d_y = np.asarray(partial_derivative(field, p, "y", h0=h0).value)
    mz_psi = -1j * (p.x * d_y - p.y * d_x) + 0.5 * (gamma_algebra().spin_z @ psi)

    ratios = np.full(4, np.nan + 0j)
    live = np.abs(psi) > threshold * largest
    ratios[live] = mz_psi[live] / psi[live]
    return ratios


def mz_check(kind: BispinorKind, p: SpaceTimePoint, params: PacketParams,
             field: Optional[Field] = None) -> complex:
    """Local M_z eigenvalue estimate from the largest component."""
    field = _field(kind, params, field)
    psi = np.asarray(field(p))
    k = int(np.argmax(np.abs(psi)))
    value = complex(mz_ratios(kind, p, params, field, threshold=1e-8)[k])
    logger.debug(f"M_z estimate {kind.value}, l={params.l} at {p}: {value}")
    return value


def fierz_residual(psi: np.ndarray) -> float:
    """|j.j - (Psi-bar Psi)^2 - (Psi-bar i gamma5 Psi)^2| relative to (j0)^2."""
    algebra = gamma_algebra()
    psi = np.asarray(psi)
    j = bilinear_current(psi)
    scalar = np.real(np.conj(psi) @ algebra.gamma[0] @ psi)
    pseudo = np.real(np.conj(psi) @ (algebra.gamma[0] @ (1j * algebra.gamma5)) @ psi)
    interval = j[0] ** 2 - np.dot(j[1:], j[1:])
    return float(abs(interval - scalar ** 2 - pseudo ** 2) / (j[0] ** 2 + EPS))
