# src/calculators/topology/tracing.py
"""
Integral curves of the current and of the two velocity fields, and the
closure analysis that tells a Hopf fibre (closed ring) from a winding
Dirac line.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial.distance import pdist

from src.calculators.dirac_states.current import four_current_arrays
from src.calculators.maxwell_hopfion.rs_field import velocity_maxwell_arrays
from src.calculators.numerics_kernel.ode import ode_trace
from src.calculators.topology.velocity import velocity_dirac_arrays
from src.models.packet import BispinorKind, PacketParams
from src.models.trace import StreamlineTrace
from src.utils.errors import ClosureError, DomainError, TraceError

logger = logging.getLogger(__name__)

SOURCES = ("current_j_plus", "velocity_dirac", "velocity_maxwell")
CLOSED_THRESHOLD = 1e-3
DEPARTURE_FRACTION = 0.05
_DIAMETER_SAMPLE = 1500


@dataclass(frozen=True)
class TraceStop:
    """Stop criteria; at least one must be set."""
    lambda_max: Optional[float] = None
    arc_max: Optional[float] = None
    rtol: float = 1e-10
    atol: float = 1e-12

    def __post_init__(self):
        if self.lambda_max is None and self.arc_max is None:
            raise DomainError("a trace needs lambda_max or arc_max")


def default_stop(params: PacketParams, seed: Sequence[float]) -> TraceStop:
    """Arc length of two turns of the widest ring through the seed."""
    reach = max(params.a, float(np.linalg.norm(seed)))
    return TraceStop(arc_max=4.0 * math.pi * reach)


def seed_family(a: float, factors: Sequence[float] = (0.5, 1.0, 1.5)):
    """Ring seeds (k a, 0, 0) on the x axis at t = 0."""
    return [(k * a, 0.0, 0.0) for k in factors]


def source_field(source: str, t: float, params: PacketParams) -> Callable[[np.ndarray], np.ndarray]:
    if source == "current_j_plus":
        def field(r):
            j = four_current_arrays(BispinorKind.PSI_PLUS, r[0], r[1], r[2], t, params,
                                    normalized=True, path="closed_form")
            return j[1:]
    elif source == "velocity_dirac":
        def field(r):
            return velocity_dirac_arrays(r[0], r[1], r[2], t, params)
    elif source == "velocity_maxwell":
        def field(r):
            return velocity_maxwell_arrays(r[0], r[1], r[2], t, params.a)
    else:
        raise DomainError(f"trace source must be one of {SOURCES}, got '{source}'")
    return field


def trace_line(source: str, seed: Sequence[float], t: float, params: PacketParams,
               stop: Optional[TraceStop] = None) -> StreamlineTrace:
    """dr/dlambda = field(r, t) with t held fixed along the curve."""
    stop = stop or default_stop(params, seed)
    field = source_field(source, t, params)
    logger.debug(f"tracing {source} from {tuple(seed)} at t={t}")
    trace = ode_trace(field, seed, lambda_max=stop.lambda_max, arc_max=stop.arc_max,
                      rtol=stop.rtol, atol=stop.atol, source=source)
    try:
        trace.closed_hint = closure_metric(trace) < CLOSED_THRESHOLD
    except ClosureError:
        trace.closed_hint = False
    return trace


# ----- closure ----------------------------------------------------------------- #
def trace_diameter(points: np.ndarray) -> float:
    step = max(1, len(points) // _DIAMETER_SAMPLE)
    return float(np.max(pdist(points[::step])))


def _seed_distance(trace: StreamlineTrace):
    seed = np.asarray(trace.seed)
    dist = np.linalg.norm(trace.points - seed, axis=1)
    diameter = trace_diameter(trace.points)
    delta = max(DEPARTURE_FRACTION * diameter, 1e-12)
    departed = np.nonzero(dist > delta)[0]
    if len(departed) == 0:
        raise ClosureError(f"trace from {trace.seed} never left a {delta:.3e} neighbourhood of its seed")
    return seed, dist, diameter, delta, int(departed[0])


def _refine(trace: StreamlineTrace, seed: np.ndarray, index: int, best: float):
    """Polish a discrete distance minimum using the dense output."""
    lam = float(trace.lambdas[index])
    if trace.interpolant is None:
        return lam, best
    lo = trace.lambdas[max(index - 1, 0)]
    hi = trace.lambdas[min(index + 1, len(trace.lambdas) - 1)]
    res = minimize_scalar(lambda u: np.linalg.norm(trace.position(u) - seed),
                          bounds=(lo, hi), method="bounded", options={"xatol": 1e-14})
    if res.fun < best:
        return float(res.x), float(res.fun)
    return lam, best


def closure_metric(trace: StreamlineTrace) -> float:
    """
    Smallest distance back to the seed after the trace first leaves a
    neighbourhood of it, divided by the trace diameter.
    """
    seed, dist, diameter, _, first = _seed_distance(trace)
    index = first + int(np.argmin(dist[first:]))
    _, best = _refine(trace, seed, index, float(dist[index]))
    return best / diameter


def first_return(trace: StreamlineTrace) -> float:
    """Parameter value of the first close approach to the seed (one period)."""
    seed, dist, diameter, delta, first = _seed_distance(trace)
    inside = np.nonzero(dist[first:] <= delta)[0]
    if len(inside) == 0:
        raise ClosureError(f"trace from {trace.seed} never came back near its seed")
    start = first + int(inside[0])
    outside = np.nonzero(dist[start:] > delta)[0]
    stop = start + int(outside[0]) if len(outside) else len(dist)
    index = start + int(np.argmin(dist[start:stop]))
    lam, _ = _refine(trace, seed, index, float(dist[index]))
    return lam


def arc_at(trace: StreamlineTrace, lam: float) -> float:
    if trace.interpolant is not None:
        return float(np.asarray(trace.interpolant(lam))[3])
    return float(np.interp(lam, trace.lambdas, trace.arc))


def loop_sampler(trace: StreamlineTrace) -> Callable[[int], np.ndarray]:
    """
    Sampler n -> one period of a closed trace as n points equally spaced
    in arc length; the closing segment back to the first point is implicit.
    """
    if trace.failed:
        raise TraceError(f"trace from {trace.seed} was aborted: {trace.message}")
    metric = closure_metric(trace)
    if metric >= CLOSED_THRESHOLD:
        raise ClosureError(f"trace from {trace.seed} is not closed (closure metric {metric:.3e})")
    period = arc_at(trace, first_return(trace))
    return lambda n: trace.resample(n + 1, arc_stop=period)[:-1]
