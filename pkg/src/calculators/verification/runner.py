# src/calculators/verification/runner.py
"""
Verification suites. Every check runs in isolation: an exception becomes a
failed check carrying the message, so one broken kernel never hides the
others.
"""
import logging
import time
from functools import partial
from typing import Callable, Dict, List, Optional

import numpy as np

from src.calculators.verification import (
    dynamics_checks,
    field_checks,
    residual_checks,
    state_checks,
    topology_checks,
)
from src.calculators.verification.sampling import LEVELS
from src.models.qc_result import QCResult, RunReport
from src.utils.errors import DomainError

logger = logging.getLogger(__name__)

Check = Callable[..., QCResult]

QUICK_CHECKS: List[Check] = [
    residual_checks.check_kg_residual,
    residual_checks.check_dirac_residual,
    residual_checks.check_maxwell_residual,
    residual_checks.check_massless_generators,
    residual_checks.check_conservation_and_causality,
    field_checks.check_null_field,
    field_checks.check_rotation_phases,
    field_checks.check_velocity_fields,
    field_checks.check_hopf_identity,
    field_checks.check_fierz,
    state_checks.check_angular_momentum,
    state_checks.check_normalization,
    topology_checks.check_hopf_fibres,
]

FULL_CHECKS: List[Check] = QUICK_CHECKS + [
    dynamics_checks.check_radius_oracle,
    dynamics_checks.check_spreading,
    dynamics_checks.check_uncertainty,
    dynamics_checks.check_contraction,
]

SUITES: Dict[str, List[Check]] = {"quick": QUICK_CHECKS, "full": FULL_CHECKS}


def _check_name(check: Check) -> str:
    func = check.func if isinstance(check, partial) else check
    return func.__name__.replace("check_", "", 1)


def run_check(check: Check, settings, rng: np.random.Generator,
              tol: Optional[float]) -> QCResult:
    try:
        return check(settings, rng, tol)
    except Exception as exc:  # recorded, never propagated
        logger.error(f"check {_check_name(check)} raised {type(exc).__name__}: {exc}")
        return (QCResult(_check_name(check)).set_validity(False)
                .add_detail("error", f"{type(exc).__name__}: {exc}"))


def run_suite(level: str = "quick", rng_seed: int = 42, tol: Optional[float] = None,
              workers: int = 1, only: Optional[List[str]] = None) -> RunReport:
    """
    Run the named suite. Each check draws from its own generator seeded
    from (rng_seed, position), so results do not depend on which checks ran
    before it.
    """
    if level not in SUITES:
        raise DomainError(f"verification level must be one of {tuple(SUITES)}, got '{level}'")
    settings = LEVELS[level]
    report = RunReport(suite=level, parameters={"rng_seed": rng_seed, "tol_override": tol,
                                                "level": level})
    for index, check in enumerate(SUITES[level]):
        if check is dynamics_checks.check_spreading:
            check = partial(check, workers=workers)
        name = _check_name(check)
        if only and name not in only:
            continue
        rng = np.random.default_rng([rng_seed, index])
        started = time.perf_counter()
        result = run_check(check, settings, rng, tol)
        elapsed = time.perf_counter() - started
        logger.info(f"{name}: {'pass' if result.is_valid else 'FAIL'} ({elapsed:.1f}s)")
        report.add(result, elapsed)
    return report
