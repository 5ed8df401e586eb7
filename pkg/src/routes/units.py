# src/routes/units.py
import click
from flask import Blueprint

from src.routes.common import handle_errors

units_bp = Blueprint('units', __name__, cli_group=None)

# reduced Compton wavelength and its light-crossing time for the electron
ELECTRON_COMPTON_M = 3.8615926796e-13
ELECTRON_COMPTON_S = ELECTRON_COMPTON_M / 299_792_458.0


def compton_table(m: float):
    if not m > 0:
        raise click.BadParameter(f"--m must be positive, got {m}")
    return [
        ("compton_wavelength", 1.0 / m, "natural length"),
        ("length_1_natural", m, "compton wavelengths"),
        ("time_1_natural", m, "compton times"),
        ("momentum_1_natural", 1.0 / m, "m c"),
        ("electron_compton_wavelength", ELECTRON_COMPTON_M, "m"),
        ("electron_compton_time", ELECTRON_COMPTON_S, "s"),
    ]


@units_bp.cli.command('units')
@click.option("--m", "m", type=float, default=1.0, show_default=True)
@handle_errors
def units(m):
    """Conversions between natural units and Compton units 1/m."""
    for name, value, unit in compton_table(m):
        click.echo(f"{name:<28} {value:.10g} {unit}")
