# src/routes/common.py
"""Options and error handling shared by the command blueprints."""
import functools
import logging
from dataclasses import replace
from typing import List, Optional, Tuple

import click
import pandas as pd
from flask import current_app

from src.models.numerics import ToleranceConfig
from src.models.packet import BispinorKind, PacketParams
from src.utils.errors import DomainError, HopfionError, NumericalError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

KIND_CHOICES = [kind.value for kind in BispinorKind]


def packet_options(func):
    """--l --a --m --v --kind"""
    options = [
        click.option("--l", "l", type=int, default=0, show_default=True, help="Winding number l >= 0."),
        click.option("--a", "a", type=float, default=1.0, show_default=True, help="Size parameter a > 0."),
        click.option("--m", "m", type=float, default=1.0, show_default=True, help="Mass m > 0 (natural units)."),
        click.option("--v", "v", type=float, default=0.0, show_default=True, help="Boost velocity along z, |v| < 1."),
        click.option("--kind", type=click.Choice(KIND_CHOICES), default="psi_plus", show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def output_options(func):
    """--format --out --tol --workers --compton"""
    options = [
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True),
        click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                     help="Output file (stdout when omitted)."),
        click.option("--tol", type=float, default=None, help="Override every acceptance threshold."),
        click.option("--workers", type=int, default=None, help="Worker threads (default from config)."),
        click.option("--compton", is_flag=True, help="Report lengths and times in Compton wavelengths 1/m."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_params(l: int, a: float, m: float, v: float) -> PacketParams:
    try:
        return PacketParams(m=m, a=a, l=l, v=v)
    except DomainError as err:
        raise click.BadParameter(str(err)) from err


def resolve_workers(workers: Optional[int]) -> int:
    if workers is not None:
        if workers < 1:
            raise click.BadParameter(f"--workers must be at least 1, got {workers}")
        return workers
    return int(current_app.config.get("WORKERS", 1))


def parse_float_list(text: str, option: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        raise click.BadParameter(f"{option} expects comma-separated numbers, got '{text}'") from err


def parse_seeds(text: str) -> List[Tuple[float, float, float]]:
    seeds = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        values = parse_float_list(chunk, "--seeds")
        if len(values) != 3:
            raise click.BadParameter(f"each seed needs three coordinates, got '{chunk}'")
        seeds.append(tuple(values))
    if not seeds:
        raise click.BadParameter("at least one seed is required")
    return seeds


def to_compton(frame: pd.DataFrame, columns, m: float) -> pd.DataFrame:
    """Lengths and times in units of 1/m."""
    frame = frame.copy()
    for column in columns:
        if column in frame:
            frame[column] = frame[column] * m
    return frame


def emit(text: str, out: Optional[str]):
    if out is None:
        click.echo(text, nl=False)


def handle_errors(func):
    """Map library errors onto the exit-code contract."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DomainError as err:
            raise click.UsageError(str(err)) from err
        except NumericalError as err:
            logger.error(f"numerical abort: {err}")
            click.echo(f"Error: numerical abort: {err}", err=True)
            raise SystemExit(EXIT_NUMERICAL) from err
        except HopfionError as err:
            click.echo(f"Error: {err}", err=True)
            raise SystemExit(EXIT_NUMERICAL) from err
    return wrapper


def trace_tolerances():
    """(rtol, atol) for streamline integration from the app config."""
    return float(current_app.config.get("REL_TOL", 1e-10)), float(current_app.config.get("ABS_TOL", 1e-12))


def quadrature_tolerance() -> ToleranceConfig:
    base = ToleranceConfig.quadrature_3d()
    try:
        return replace(base, rel_tol=float(current_app.config.get("QUAD_REL_TOL", base.rel_tol)),
                       abs_tol=float(current_app.config.get("ABS_TOL", base.abs_tol)))
    except DomainError as err:
        raise click.BadParameter(f"invalid quadrature tolerance in configuration: {err}") from err
