# src/routes/analyze.py
import logging
import math
from itertools import product

import click
import pandas as pd
from flask import Blueprint

from src.calculators.dirac_states.norm import total_charge
from src.calculators.dirac_states.normalization import normalization_constant
from src.calculators.dynamics.moments import default_time_samples, spatial_moment, spreading_fit, uncertainty_product
from src.calculators.dynamics.momentum import momentum_norm, spreading_coefficient_b
from src.models.dynamics import DELTA_P_CONVENTIONS, NONRELATIVISTIC_BOUND, PHOTON_UNCERTAINTY_BOUND
from src.models.packet import BispinorKind, PacketParams
from src.models.qc_result import QCResult, RunReport
from src.routes.common import (
    EXIT_CHECK_FAILURE,
    EXIT_NUMERICAL,
    build_params,
    emit,
    handle_errors,
    output_options,
    packet_options,
    parse_float_list,
    quadrature_tolerance,
    resolve_workers,
    to_compton,
)
from src.utils.errors import HopfionError
from src.utils.export import write_frame
from src.utils.tolerance import get_tolerance
from src.utils.workers import parallel_map

logger = logging.getLogger(__name__)

analyze_bp = Blueprint('analyze', __name__, cli_group=None)

ANALYSES = ("norm", "moments", "spreading", "uncertainty")


def _norm_row(kind, params, tol_override, quad):
    position = float(total_charge(kind, params, tol=quad).value)
    row = {"kind": kind.value, "l": params.l, "a": params.a, "m": params.m, "v": params.v,
           "N": normalization_constant(kind, params).N, "position": position}
    row["momentum"] = momentum_norm(kind, params) if params.v == 0 else math.nan
    check = QCResult(f"norm:{kind.value},l={params.l},a={params.a}").set_validity(True)
    check.check_below("position", abs(position - 1.0), get_tolerance("norm", tol_override))
    if params.v == 0:
        check.check_below("momentum", abs(row["momentum"] - 1.0), get_tolerance("momentum_norm", tol_override))
    return row, check


def _moment_rows(kind, params, times, quad):
    rows = []
    for t in times:
        moment = spatial_moment(kind, params, t, tol=quad)
        rows.append({"l": params.l, "a": params.a, "t": t, "r2": moment.value, "error": moment.error})
    return rows


def _spreading_row(kind, params, times, quad):
    fit = spreading_fit(kind, params, times, tol=quad)
    return {"l": params.l, "a": params.a, "A": fit.A, "B": fit.B,
            "B_exact": spreading_coefficient_b(kind, params), "fit_residual": fit.fit_residual}


def _uncertainty_row(kind, params, quad):
    result = uncertainty_product(kind, params, tol=quad)
    row = {"l": params.l, "a": params.a, "delta_r": result.delta_r}
    for name in DELTA_P_CONVENTIONS:
        row[f"delta_p_{name}"] = result.delta_p[name]
        row[f"product_{name}"] = result.products()[name]
    return row


def run_analysis(analysis, kind, base, l_list, a_list, t_list, tol_override=None, workers=1,
                 quad=None):
    """Sweep table plus a report; a failed sweep point becomes a failed check."""
    report = RunReport(suite=f"analyze:{analysis}")
    kinds = list(BispinorKind) if analysis == "norm" else [kind]
    points = [(k, PacketParams(m=base.m, a=a, l=l, v=base.v if analysis == "norm" else 0.0))
              for k, l, a in product(kinds, l_list, a_list)]

    def one(point):
        k, params = point
        try:
            if analysis == "norm":
                return _norm_row(k, params, tol_override, quad)
            if analysis == "moments":
                return _moment_rows(k, params, t_list or default_time_samples(params.a), quad), None
            if analysis == "spreading":
                return _spreading_row(k, params, t_list or None, quad), None
            return _uncertainty_row(k, params, quad), None
        except HopfionError as err:
            failed = (QCResult(f"{analysis}:{k.value},l={params.l},a={params.a}")
                      .set_validity(False).add_detail("error", f"{type(err).__name__}: {err}"))
            return None, failed

    rows = []
    for row, check in parallel_map(one, points, workers):
        if isinstance(row, list):
            rows.extend(row)
        elif row is not None:
            rows.append(row)
        if check is not None:
            report.add(check)
    return pd.DataFrame(rows), report


@analyze_bp.cli.command('analyze')
@click.option("--analysis", type=click.Choice(ANALYSES), required=True)
@click.option("--l-list", default="0", show_default=True, help="Comma-separated winding numbers.")
@click.option("--a-list", default="1", show_default=True, help="Comma-separated sizes.")
@click.option("--t-list", default="", help="Comma-separated times (moments, spreading).")
@packet_options
@output_options
@handle_errors
def analyze(analysis, l_list, a_list, t_list, l, a, m, v, kind, fmt, out, tol, workers, compton):
    """Normalisation, moment, spreading and uncertainty sweeps."""
    base = build_params(l, a, m, v)
    l_values = [int(value) for value in parse_float_list(l_list, "--l-list")]
    a_values = parse_float_list(a_list, "--a-list")
    t_values = parse_float_list(t_list, "--t-list") if t_list else []
    frame, report = run_analysis(analysis, BispinorKind.parse(kind), base, l_values, a_values,
                                 t_values, tol, resolve_workers(workers), quadrature_tolerance())
    if compton:
        frame = to_compton(frame, ["a", "t", "delta_r"], base.m)
        if "r2" in frame:
            frame["r2"] = frame["r2"] * base.m ** 2
        for name in DELTA_P_CONVENTIONS:
            if f"delta_p_{name}" in frame:
                frame[f"delta_p_{name}"] = frame[f"delta_p_{name}"] / base.m
    metadata = {
        "analysis": analysis,
        "kind": kind,
        "m": base.m,
        "delta_p_conventions": list(DELTA_P_CONVENTIONS),
        "nonrelativistic_bound": NONRELATIVISTIC_BOUND,
        "photon_reference_bound": PHOTON_UNCERTAINTY_BOUND,
        "spreading_form": "<r^2> = A/m^2 + B (a^2 + t^2)",
        "length_unit": "compton" if compton else "natural",
        "report": report.body(),
    }
    text = write_frame(frame, out, fmt, metadata, report.header())
    emit(text, out)
    if frame.empty:
        raise SystemExit(EXIT_NUMERICAL)
    if not all(check.is_valid for check in report.checks):
        raise SystemExit(EXIT_CHECK_FAILURE)
