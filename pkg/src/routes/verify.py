# src/routes/verify.py
import logging

import click
from flask import Blueprint

from src.calculators.verification.runner import SUITES, run_suite
from src.routes.common import EXIT_CHECK_FAILURE, emit, handle_errors, resolve_workers
from src.utils.export import write_document

logger = logging.getLogger(__name__)

verify_bp = Blueprint('verify', __name__, cli_group=None)


@verify_bp.cli.command('verify')
@click.option("--level", type=click.Choice(list(SUITES)), default="quick", show_default=True)
@click.option("--rng-seed", type=int, default=42, show_default=True)
@click.option("--tol", type=float, default=None, help="Override every acceptance threshold.")
@click.option("--workers", type=int, default=None)
@click.option("--only", multiple=True, help="Run only the named checks (repeatable).")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@handle_errors
def verify(level, rng_seed, tol, workers, only, out):
    """Run the invariant suites; exit code 1 when any check fails."""
    report = run_suite(level, rng_seed, tol, resolve_workers(workers), list(only) or None)
    text = write_document(report.body(), out, report.header())
    emit(text, out)
    for check in report.checks:
        click.echo(f"{'PASS' if check.is_valid else 'FAIL'}  {check.test_name}", err=True)
    if not report.checks or not report.passed:
        raise SystemExit(EXIT_CHECK_FAILURE)
