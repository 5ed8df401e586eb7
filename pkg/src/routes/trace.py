# src/routes/trace.py
import logging
from dataclasses import replace
from itertools import combinations

import click
import numpy as np
import pandas as pd
from flask import Blueprint

from src.calculators.topology.linking import METHODS, linking_number
from src.calculators.topology.tracing import SOURCES, TraceStop, closure_metric, default_stop, trace_line
from src.routes.common import (
    EXIT_NUMERICAL,
    build_params,
    emit,
    handle_errors,
    output_options,
    packet_options,
    parse_seeds,
    resolve_workers,
    to_compton,
    trace_tolerances,
)
from src.utils.errors import HopfionError
from src.utils.export import write_frame
from src.utils.workers import parallel_map

logger = logging.getLogger(__name__)

trace_bp = Blueprint('trace', __name__, cli_group=None)

POINTS_PER_TRACE = 2000


def run_traces(source, seeds, t, params, lambda_max=None, arc_max=None, workers=1,
               rtol=1e-10, atol=1e-12):
    """One (trace, error) pair per seed; failures do not stop the other seeds."""
    def one(seed):
        try:
            stop = (TraceStop(lambda_max=lambda_max, arc_max=arc_max)
                    if lambda_max is not None or arc_max is not None
                    else default_stop(params, seed))
            stop = replace(stop, rtol=rtol, atol=atol)
            return trace_line(source, seed, t, params, stop), None
        except HopfionError as err:
            logger.warning(f"seed {seed} failed: {err}")
            return None, f"{type(err).__name__}: {err}"

    return parallel_map(one, seeds, workers)


def trace_summary(seeds, results, link: bool, method: str = "gauss"):
    per_seed = []
    for index, (seed, (trace, error)) in enumerate(zip(seeds, results)):
        entry = {"index": index, "seed": list(seed), "status": "ok" if error is None else "error"}
        if error is not None:
            entry["error"] = error
        else:
            entry.update(trace.to_dict())
            try:
                entry["closure_metric"] = closure_metric(trace)
            except HopfionError as err:
                entry["closure_metric"] = None
                entry["closure_error"] = str(err)
        per_seed.append(entry)

    links = []
    if link:
        traced = [(i, trace) for i, (trace, error) in enumerate(results) if error is None]
        for (i, first), (j, second) in combinations(traced, 2):
            try:
                links.append({"pair": [i, j], "linking_number": linking_number(first, second, method)})
            except HopfionError as err:
                links.append({"pair": [i, j], "linking_number": None, "error": str(err)})
    return {"seeds": per_seed, "linking": links, "linking_method": method}


def traces_frame(results) -> pd.DataFrame:
    frames = []
    for index, (trace, error) in enumerate(results):
        if error is not None:
            continue
        count = min(POINTS_PER_TRACE, len(trace.points))
        pick = np.unique(np.linspace(0, len(trace.points) - 1, count).astype(int))
        frames.append(pd.DataFrame({
            "seed_index": index,
            "lambda": trace.lambdas[pick],
            "arc": trace.arc[pick],
            "x": trace.points[pick, 0],
            "y": trace.points[pick, 1],
            "z": trace.points[pick, 2],
        }))
    if not frames:
        return pd.DataFrame(columns=["seed_index", "lambda", "arc", "x", "y", "z"])
    return pd.concat(frames, ignore_index=True)


@trace_bp.cli.command('trace')
@click.option("--source", type=click.Choice(SOURCES), required=True)
@click.option("--seeds", "seeds_text", required=True, help='Seeds as "x,y,z;x,y,z".')
@click.option("--t", "t", type=float, default=0.0, show_default=True, help="Time slice of the field.")
@click.option("--lambda-max", type=float, default=None)
@click.option("--arc-max", type=float, default=None)
@click.option("--link/--no-link", default=True, show_default=True, help="Pairwise linking numbers.")
@click.option("--linking-method", type=click.Choice(METHODS), default="gauss", show_default=True)
@packet_options
@output_options
@handle_errors
def trace(source, seeds_text, t, lambda_max, arc_max, link, linking_method,
          l, a, m, v, kind, fmt, out, tol, workers, compton):
    """Trace current or velocity lines from seeds."""
    params = build_params(l, a, m, v)
    seeds = parse_seeds(seeds_text)
    rtol, atol = trace_tolerances()
    results = run_traces(source, seeds, t, params, lambda_max, arc_max, resolve_workers(workers),
                         rtol, atol)
    summary = trace_summary(seeds, results, link, linking_method)
    frame = traces_frame(results)
    if compton:
        frame = to_compton(frame, ["x", "y", "z", "arc"], params.m)
    metadata = {"source": source, "t": t, "params": params.to_dict(), "summary": summary,
                "length_unit": "compton" if compton else "natural"}
    text = write_frame(frame, out, fmt, metadata)
    emit(text, out)
    if all(error is not None for _, error in results):
        click.echo("Error: every seed failed", err=True)
        raise SystemExit(EXIT_NUMERICAL)
