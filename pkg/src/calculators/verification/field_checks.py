# src/calculators/verification/field_checks.py
"""Algebraic identities of the Maxwell hopfion, the velocity fields and the Hopf map."""
import logging
from typing import Optional

import numpy as np

from src.calculators.dirac_states.bispinor import bispinor
from src.calculators.dirac_states.checks import fierz_residual
from src.calculators.dirac_states.current import four_current
from src.calculators.maxwell_hopfion.rs_field import (
    derived_em,
    mirror_z,
    rs_rotation_phases,
    rs_vector,
    velocity_maxwell,
)
from src.calculators.topology.velocity import (
    hopf_closed_form,
    hopf_level_line,
    hopf_map,
    velocity_dirac,
    velocity_gap,
)
from src.calculators.verification.sampling import SuiteSettings, random_points
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.models.qc_result import QCResult
from src.utils.tolerance import get_tolerance

logger = logging.getLogger(__name__)

GAP_MASSES = (1.0, 0.1, 0.01)


def check_null_field(settings: SuiteSettings, rng: np.random.Generator,
                     tol: Optional[float] = None) -> QCResult:
    """F.F = 0, |v| = 1, l-independence and the z-mirror relation of the RS velocity."""
    result = QCResult("null_field").set_validity(True)
    points = random_points(rng, settings.n_points, 1.0)
    null, speed, mirror = 0.0, 0.0, 0.0
    for l in settings.l_values:
        for p in points:
            F = rs_vector(p, 1.0, l)
            null = max(null, abs(F.square) / F.norm2)
            v_rs = np.asarray(derived_em(F).vM)
            speed = max(speed, abs(np.linalg.norm(v_rs) - 1.0),
                        abs(np.linalg.norm(velocity_maxwell(p, 1.0)) - 1.0))
            mirror = max(mirror, float(np.linalg.norm(v_rs - mirror_z(p, 1.0))))
    result.check_below("null_field", null, get_tolerance("null_field", tol))
    result.check_below("unit_speed", speed, get_tolerance("unit_speed", tol))
    result.check_below("mirror_relation", mirror, get_tolerance("mirror_relation", tol))
    return result


def check_rotation_phases(settings: SuiteSettings, rng: np.random.Generator,
                          tol: Optional[float] = None) -> QCResult:
    result = QCResult("maxwell_angular_momentum").set_validity(True)
    threshold = get_tolerance("rotation_phase", tol)
    phi = 0.7
    for l in settings.l_values:
        worst = 0.0
        for p in random_points(rng, settings.n_points, 1.0):
            expected = np.exp(1j * phi * np.array([l + 2, l, l + 1]))
            worst = max(worst, float(np.max(np.abs(rs_rotation_phases(p, 1.0, l, phi) - expected))))
        result.check_below(f"l={l}", worst, threshold)
    return result


def check_velocity_fields(settings: SuiteSettings, rng: np.random.Generator,
                          tol: Optional[float] = None) -> QCResult:
    """v_D against j/j0, subluminality, and the shrinking gap to v_M as m -> 0."""
    result = QCResult("velocity_fields").set_validity(True)
    points = random_points(rng, settings.n_points, 1.0)
    mutual, fastest = 0.0, 0.0
    for l in settings.l_values:
        params = PacketParams(l=l)
        for p in points:
            j = four_current(BispinorKind.PSI_PLUS, p, params, path="closed_form")
            v_d = velocity_dirac(p, params)
            mutual = max(mutual, float(np.linalg.norm(v_d - j.spatial / j.j0)))
            fastest = max(fastest, float(np.linalg.norm(v_d)))
    result.check_below("velocity_mutual", mutual, get_tolerance("velocity_mutual", tol))
    result.add_measurement("max_dirac_speed", fastest)
    if not fastest < 1.0:
        result.set_validity(False).add_detail("subluminal", "a Dirac velocity reached 1")

    monotone = True
    for p in points:
        gaps = [velocity_gap(p, PacketParams(m=m)) for m in GAP_MASSES]
        monotone &= all(b < a for a, b in zip(gaps, gaps[1:]))
    result.add_detail("gap_decreases_with_mass", bool(monotone))
    if not monotone:
        result.set_validity(False)
    return result


def check_hopf_identity(settings: SuiteSettings, rng: np.random.Generator,
                        tol: Optional[float] = None) -> QCResult:
    result = QCResult("hopf_identity").set_validity(True)
    worst = 0.0
    for l in settings.l_values:
        params = PacketParams(l=l)
        for p in random_points(rng, settings.n_points, 1.0):
            expected = hopf_closed_form(p, 1.0)
            for v in (velocity_dirac(p, params), velocity_maxwell(p, 1.0)):
                value = hopf_map(v)
                if value.is_infinite:
                    continue
                worst = max(worst, abs(value.upsilon - expected) / max(1.0, abs(expected)))
    result.check_below("hopf_identity", worst, get_tolerance("hopf_identity", tol))

    upsilon = complex(0.7, 0.2)
    line = hopf_level_line(upsilon, 0.0, 1.0, (-3.0, 3.0), 20)
    along = max(abs(hopf_map(velocity_maxwell(SpaceTimePoint(x, y, z, 0.0), 1.0)).upsilon - upsilon)
                for x, y, z in line)
    result.check_below("level_line", along, get_tolerance("level_line", tol))
    return result


def check_fierz(settings: SuiteSettings, rng: np.random.Generator,
                tol: Optional[float] = None) -> QCResult:
    result = QCResult("fierz_identity").set_validity(True)
    worst = 0.0
    for kind in BispinorKind:
        for v in settings.velocities:
            params = PacketParams(l=settings.l_values[-1], v=v)
            for p in random_points(rng, settings.n_points, 1.0):
                worst = max(worst, fierz_residual(bispinor(kind, p, params).components))
    result.check_below("fierz", worst, get_tolerance("fierz", tol))
    return result
