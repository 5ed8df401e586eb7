# src/calculators/numerics_kernel/ode.py
"""
Integral curves dr/dlambda = F(r) with an embedded 8(5,3) Runge-Kutta pair.

The state carries the cumulative arc length as a fourth component so a
trace can be stopped at a given length as well as at a given lambda.
Failures never raise: the partial trace comes back flagged.
"""
import logging
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import DOP853, OdeSolution
from scipy.optimize import brentq

from src.models.trace import StreamlineTrace
from src.utils.errors import DegeneratePointError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_RTOL = 1e-10
DEFAULT_ATOL = 1e-12


def ode_trace(field: Callable[[np.ndarray], np.ndarray],
              seed: Sequence[float],
              *,
              lambda_max: Optional[float] = None,
              arc_max: Optional[float] = None,
              rtol: float = DEFAULT_RTOL,
              atol: float = DEFAULT_ATOL,
              max_step: float = np.inf,
              max_evals: int = 2_000_000,
              source: str = "") -> StreamlineTrace:
    """
    Trace the curve of `field` through `seed` until lambda_max or arc_max.

    `field` maps a 3-vector to a 3-vector. At least one stop criterion is
    required. The returned trace keeps the dense-output interpolant.
    """
    if lambda_max is None and arc_max is None:
        raise DomainError("ode_trace needs lambda_max or arc_max")
    if lambda_max is not None and not lambda_max > 0:
        raise DomainError(f"lambda_max must be positive, got {lambda_max}")
    if arc_max is not None and not arc_max > 0:
        raise DomainError(f"arc_max must be positive, got {arc_max}")

    seed = np.asarray(seed, dtype=float)
    start = np.asarray(field(seed), dtype=float)
    if not np.all(np.isfinite(start)) or not np.linalg.norm(start) > 0:
        raise DegeneratePointError(f"field vanishes or is undefined at seed {tuple(seed)}")

    def rhs(_lam, state):
        vec = np.asarray(field(state[:3]), dtype=float)
        return np.append(vec, np.linalg.norm(vec))

    t_bound = lambda_max if lambda_max is not None else 1e12
    solver = DOP853(rhs, 0.0, np.append(seed, 0.0), t_bound,
                    rtol=rtol, atol=atol, max_step=max_step)

    lambdas = [0.0]
    states = [solver.y.copy()]
    interpolants = []
    failed = False
    message = ""
    while solver.status == "running":
        step_message = solver.step()
        if solver.status == "failed":
            failed, message = True, f"step failed: {step_message}"
            break
        lambdas.append(solver.t)
        states.append(solver.y.copy())
        interpolants.append(solver.dense_output())
        if arc_max is not None and solver.y[3] >= arc_max:
            break
        if solver.nfev > max_evals:
            failed, message = True, f"evaluation budget of {max_evals} exhausted"
            break

    if failed:
        logger.warning(f"trace from seed {tuple(seed)} aborted after {len(lambdas)} points: {message}")
    if len(lambdas) < 2:
        raise DegeneratePointError(f"no step could be taken from seed {tuple(seed)}: {message}")

    sol = OdeSolution(lambdas, interpolants)
    lambdas = np.asarray(lambdas)
    states = np.asarray(states)

    if arc_max is not None and states[-1, 3] > arc_max:
        lam_stop = brentq(lambda lam: sol(lam)[3] - arc_max, lambdas[-2], lambdas[-1],
                          xtol=1e-14, rtol=1e-14)
        lambdas[-1] = lam_stop
        states[-1] = sol(lam_stop)
        if lambdas[-1] <= lambdas[-2]:
            lambdas, states = lambdas[:-1], states[:-1]

    return StreamlineTrace(points=states[:, :3], lambdas=lambdas, arc=states[:, 3],
                           seed=tuple(float(c) for c in seed), failed=failed,
                           message=message, source=source, interpolant=sol)
