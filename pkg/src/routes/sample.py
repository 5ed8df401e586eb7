# src/routes/sample.py
import logging
from typing import Dict, List

import click
import numpy as np
import pandas as pd
from flask import Blueprint

from src.calculators.dirac_states.current import four_current_arrays
from src.calculators.kg_fields.fields import MASSLESS_FORMS, scalar_field_arrays, scalar_field_massless_arrays
from src.calculators.maxwell_hopfion.rs_field import rs_vector_arrays, velocity_maxwell_arrays
from src.calculators.topology.velocity import hopf_map_arrays, velocity_dirac_arrays
from src.models.grid import COORDINATES, GridSpec
from src.models.packet import BispinorKind, PacketParams
from src.routes.common import (
    build_params,
    emit,
    handle_errors,
    output_options,
    packet_options,
    resolve_workers,
    to_compton,
)
from src.utils.export import write_frame
from src.utils.workers import parallel_map

logger = logging.getLogger(__name__)

sample_bp = Blueprint('sample', __name__, cli_group=None)

FIELDS = ("f_l", "g_l", "j_mu", "v_dirac", "v_maxwell", "rs_vector", "charge_profile", "upsilon")
CHUNK = 20_000


def _complex_columns(prefix: str, values: np.ndarray) -> Dict[str, np.ndarray]:
    return {f"{prefix}_re": values.real, f"{prefix}_im": values.imag}


def _vector_columns(prefix: str, values: np.ndarray, axes: List[str]) -> Dict[str, np.ndarray]:
    index = {"x": 0, "y": 1, "z": 2}
    return {f"{prefix}{axis}": values[..., index[axis]] for axis in axes}


def evaluate_field(field: str, kind: BispinorKind, params: PacketParams, coords: Dict[str, np.ndarray],
                   vector_axes: List[str], form: str = "direct") -> Dict[str, np.ndarray]:
    """Field components as named columns for flat coordinate arrays."""
    x, y, z, t = (coords[name] for name in COORDINATES)
    if field == "f_l":
        return _complex_columns("f", scalar_field_arrays(x, y, z, t, params))
    if field == "g_l":
        return _complex_columns("g", scalar_field_massless_arrays(x, y, z, t, params.a, params.l, form))
    if field == "j_mu":
        j = four_current_arrays(kind, x, y, z, t, params)
        return {"j0": j[..., 0], "jx": j[..., 1], "jy": j[..., 2], "jz": j[..., 3]}
    if field == "charge_profile":
        return {"j0": four_current_arrays(kind, x, y, z, t, params)[..., 0]}
    if field == "v_dirac":
        return _vector_columns("v", velocity_dirac_arrays(x, y, z, t, params), vector_axes)
    if field == "v_maxwell":
        return _vector_columns("v", velocity_maxwell_arrays(x, y, z, t, params.a), vector_axes)
    if field == "rs_vector":
        F = rs_vector_arrays(x, y, z, t, params.a, params.l)
        columns = {}
        for axis, k in (("x", 0), ("y", 1), ("z", 2)):
            columns.update(_complex_columns(f"F{axis}", F[..., k]))
        return columns
    if field == "upsilon":
        upsilon = hopf_map_arrays(velocity_maxwell_arrays(x, y, z, t, params.a))
        return _complex_columns("upsilon", upsilon)
    raise click.BadParameter(f"field must be one of {FIELDS}, got '{field}'")


def sample_frame(field: str, kind: BispinorKind, params: PacketParams, grid: GridSpec,
                 form: str = "direct", workers: int = 1) -> pd.DataFrame:
    """Rows in grid order (first axis outermost): active coordinates, then components."""
    if field == "charge_profile" and grid.names != ("x", "z"):
        raise click.BadParameter("charge_profile needs an x-z grid, e.g. --grid x=-3:3:121,z=-3:3:121")
    coords = grid.mesh()
    spatial = [name for name in grid.names if name != "t"]
    vector_axes = spatial if len(spatial) == 2 else ["x", "y", "z"]

    starts = range(0, grid.size, CHUNK)
    chunks = parallel_map(
        lambda start: evaluate_field(field, kind, params,
                                     {k: v[start:start + CHUNK] for k, v in coords.items()},
                                     vector_axes, form),
        starts, workers)
    data = {name: coords[name] for name in grid.names}
    for column in chunks[0]:
        data[column] = np.concatenate([chunk[column] for chunk in chunks])
    return pd.DataFrame(data)


@sample_bp.cli.command('sample')
@click.option("--field", type=click.Choice(FIELDS), required=True)
@click.option("--grid", "grid_text", default="x=-3:3:61,y=-3:3:61", show_default=True,
              help="Active axes as name=min:max:count, outermost first.")
@click.option("--at", "at_text", default="", help="Fixed coordinates, e.g. z=0,t=0.")
@click.option("--form", type=click.Choice(MASSLESS_FORMS), default="direct", show_default=True,
              help="Massless generator form for g_l.")
@packet_options
@output_options
@handle_errors
def sample(field, grid_text, at_text, form, l, a, m, v, kind, fmt, out, tol, workers, compton):
    """Sample a field on a grid and export it."""
    params = build_params(l, a, m, v)
    grid = GridSpec.parse(grid_text, at_text)
    frame = sample_frame(field, BispinorKind.parse(kind), params, grid, form, resolve_workers(workers))
    if compton:
        frame = to_compton(frame, grid.names, params.m)
    metadata = {
        "field": field,
        "kind": kind,
        "params": params.to_dict(),
        "grid": grid.to_dict(),
        "form": form,
        "length_unit": "compton" if compton else "natural",
        "boost_convention": "boost along +z with s^2 = r^2 - t^2 + a^2 + 2 i a gamma (t - v z)",
    }
    text = write_frame(frame, out, fmt, metadata)
    emit(text, out)
    logger.info(f"sampled {field} on {grid.shape}")
