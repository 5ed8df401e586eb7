# src/calculators/verification/residual_checks.py
"""PDE residual, conservation and causality checks at random events."""
import logging
from typing import Optional

import numpy as np

from src.calculators.dirac_states.checks import current_conservation_residual, dirac_residual
from src.calculators.dirac_states.current import four_current
from src.calculators.kg_fields.fields import MASSLESS_FORMS
from src.calculators.kg_fields.residual import dalembert_residual, kg_residual
from src.calculators.maxwell_hopfion.rs_field import maxwell_residual
from src.calculators.verification.sampling import SuiteSettings, random_points
from src.models.packet import BispinorKind, PacketParams
from src.models.qc_result import QCResult
from src.utils.tolerance import get_tolerance

logger = logging.getLogger(__name__)


def check_kg_residual(settings: SuiteSettings, rng: np.random.Generator,
                      tol: Optional[float] = None) -> QCResult:
    result = QCResult("kg_residual").set_validity(True)
    threshold = get_tolerance("kg_residual", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for l in settings.l_values:
        for v in settings.velocities:
            params = PacketParams(l=l, v=v)
            worst = max(kg_residual(p, params) for p in points)
            result.check_below(f"l={l},v={v}", worst, threshold)
    return result


def check_dirac_residual(settings: SuiteSettings, rng: np.random.Generator,
                         tol: Optional[float] = None) -> QCResult:
    result = QCResult("dirac_residual").set_validity(True)
    threshold = get_tolerance("dirac_residual", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for kind in BispinorKind:
        for l in settings.l_values:
            for v in settings.velocities:
                params = PacketParams(l=l, v=v)
                worst = max(dirac_residual(kind, p, params) for p in points)
                result.check_below(f"{kind.value},l={l},v={v}", worst, threshold)
    return result


def check_maxwell_residual(settings: SuiteSettings, rng: np.random.Generator,
                           tol: Optional[float] = None) -> QCResult:
    result = QCResult("maxwell_residual").set_validity(True)
    threshold = get_tolerance("maxwell_residual", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for l in settings.l_values:
        worst = max(maxwell_residual(p, 1.0, l) for p in points)
        result.check_below(f"l={l}", worst, threshold)
    return result


def check_massless_generators(settings: SuiteSettings, rng: np.random.Generator,
                              tol: Optional[float] = None) -> QCResult:
    """
    The raised generator solves the wave equation for every l; the direct
    one only for l = 0, so its l >= 1 residuals are measurements only.
    """
    result = QCResult("massless_residual").set_validity(True)
    threshold = get_tolerance("massless_residual", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for form in MASSLESS_FORMS:
        for l in settings.l_values:
            worst = max(dalembert_residual(p, 1.0, l, form) for p in points)
            if form == "raised" or l == 0:
                result.check_below(f"{form},l={l}", worst, threshold)
            else:
                result.add_measurement(f"{form},l={l}", worst)
    return result


def check_conservation_and_causality(settings: SuiteSettings, rng: np.random.Generator,
                                     tol: Optional[float] = None) -> QCResult:
    result = QCResult("conservation_causality").set_validity(True)
    threshold = get_tolerance("conservation_residual", tol)
    slack = get_tolerance("causality", tol)
    points = random_points(rng, settings.n_points, 1.0)
    for kind in BispinorKind:
        for v in settings.velocities:
            params = PacketParams(l=settings.l_values[-1], v=v)
            worst = max(current_conservation_residual(kind, p, params) for p in points)
            result.check_below(f"conservation:{kind.value},v={v}", worst, threshold)
            # causality: relative amount by which |j| exceeds j0
            excess = 0.0
            for p in points:
                j = four_current(kind, p, params)
                excess = max(excess, -j.interval / (j.j0 ** 2 + 1e-300))
            result.check_below(f"causality:{kind.value},v={v}", max(excess, 0.0), slack)
    return result
