# src/calculators/verification/topology_checks.py
import logging
from typing import Optional

import numpy as np

from src.calculators.topology.linking import linking_number
from src.calculators.topology.tracing import closure_metric, trace_line
from src.calculators.verification.sampling import SuiteSettings
from src.models.packet import PacketParams
from src.models.qc_result import QCResult
from src.utils.tolerance import get_tolerance

logger = logging.getLogger(__name__)

RING_SEEDS = ((1.0, 0.0, 0.0), (1.5, 0.0, 0.0))
WINDING_RATIO = 10.0
# right-handed Gauss orientation of the v_M rings through RING_SEEDS
EXPECTED_LINKING = -1.0


def check_hopf_fibres(settings: SuiteSettings, rng: np.random.Generator,
                      tol: Optional[float] = None) -> QCResult:
    """
    Two Maxwell rings close and link once; the Dirac line through the same
    seed keeps winding.
    """
    result = QCResult("hopf_fibres").set_validity(True)
    params = PacketParams()
    closure_tol = get_tolerance("closure", tol)

    rings = [trace_line("velocity_maxwell", seed, 0.0, params) for seed in RING_SEEDS]
    metrics = [closure_metric(ring) for ring in rings]
    for seed, metric in zip(RING_SEEDS, metrics):
        result.check_below(f"closure:maxwell:{seed}", metric, closure_tol)

    link = linking_number(rings[0], rings[1])
    result.add_measurement("linking_number", link)
    result.add_theoretical("linking_number", EXPECTED_LINKING)
    result.check_below("linking", abs(link - EXPECTED_LINKING), get_tolerance("linking", tol))

    dirac = trace_line("velocity_dirac", RING_SEEDS[0], 0.0, params)
    dirac_metric = closure_metric(dirac)
    result.add_measurement("closure:dirac", dirac_metric)
    ratio = dirac_metric / max(metrics[0], 1e-300)
    result.add_measurement("dirac_to_maxwell_closure", ratio)
    if not ratio > WINDING_RATIO:
        result.set_validity(False).add_detail("dirac_winding", "Dirac line closes as well as the Maxwell ring")
    return result
