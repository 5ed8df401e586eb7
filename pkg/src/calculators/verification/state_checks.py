# src/calculators/verification/state_checks.py
"""Normalisation (position space, momentum space, constant) and angular momentum."""
import logging
from typing import Optional

import numpy as np

from src.calculators.dirac_states.checks import mz_check
from src.calculators.dirac_states.norm import norm_integral, total_charge
from src.calculators.dirac_states.rotation import rotate_pi_x
from src.calculators.dynamics.momentum import momentum_norm
from src.calculators.verification.sampling import SuiteSettings, random_points
from src.models.packet import BispinorKind, PacketParams
from src.models.qc_result import QCResult
from src.utils.tolerance import get_tolerance

logger = logging.getLogger(__name__)


def check_normalization(settings: SuiteSettings, rng: np.random.Generator,
                        tol: Optional[float] = None) -> QCResult:
    """3D charge integral, 1D momentum integral and the closed-form constant agree on 1."""
    result = QCResult("normalization").set_validity(True)
    threshold = get_tolerance("norm", tol)
    for l, a, m in settings.norm_cases:
        params = PacketParams(m=m, a=a, l=l)
        for kind in settings.norm_kinds:
            label = f"{kind.value},l={l},a={a},m={m}"
            position = norm_integral(kind, params)
            momentum = momentum_norm(kind, params)
            result.add_measurement(f"position:{label}", position)
            result.add_measurement(f"momentum:{label}", momentum)
            result.check_below(f"position:{label}", abs(position - 1.0), threshold)
            result.check_below(f"momentum:{label}", abs(momentum - 1.0),
                               get_tolerance("momentum_norm", tol))
    for v in settings.velocities:
        if v == 0.0:
            continue
        for kind in BispinorKind:
            charge = total_charge(kind, PacketParams(v=v)).value
            result.check_below(f"boosted:{kind.value},v={v}", abs(charge - 1.0), threshold)
    return result


def check_angular_momentum(settings: SuiteSettings, rng: np.random.Generator,
                           tol: Optional[float] = None) -> QCResult:
    """
    M_z eigenvalue l + 1/2 for every kind; a rotation by pi about x flips it.
    """
    result = QCResult("angular_momentum").set_validity(True)
    threshold = get_tolerance("mz_eigenvalue", tol)
    flip = get_tolerance("rotation_flip", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for kind in BispinorKind:
        for l in settings.l_values:
            params = PacketParams(l=l)
            expected = l + 0.5
            rotated = rotate_pi_x(kind, params)
            worst, worst_flip = 0.0, 0.0
            for p in points:
                worst = max(worst, abs(mz_check(kind, p, params) - expected))
                worst_flip = max(worst_flip, abs(mz_check(kind, p, params, field=rotated) + expected))
            result.add_theoretical(f"{kind.value},l={l}", expected)
            result.check_below(f"{kind.value},l={l}", worst, threshold)
            result.check_below(f"flip:{kind.value},l={l}", worst_flip, flip)
    return result
