# src/calculators/kg_fields/residual.py
"""Klein-Gordon and d'Alembert residuals from finite differences of analytic gradients."""
import logging

from src.calculators.kg_fields.fields import (
    massless_gradient_arrays,
    scalar_field_arrays,
    scalar_gradient_arrays,
)
from src.calculators.numerics_kernel.richardson import AXES, default_step, partial_derivative
from src.models.packet import PacketParams, SpaceTimePoint

logger = logging.getLogger(__name__)

EPS = 1e-300
_SIGNS = {"t": 1.0, "x": -1.0, "y": -1.0, "z": -1.0}


def _wave_operator(gradient, p: SpaceTimePoint, h0: float):
    """Return (box f, sum of |second derivative| terms)."""
    box = 0.0j
    scale = 0.0
    for index, axis in enumerate(AXES):
        component = lambda q, k=index: complex(gradient(q)[k])
        second = partial_derivative(component, p, axis, order=1, h0=h0).value
        box += _SIGNS[axis] * second
        scale += abs(second)
    return box, scale


def kg_residual(p: SpaceTimePoint, params: PacketParams) -> float:
    """|(d_t^2 - lap + m^2) f_l| relative to m^2 |f_l|."""
    gradient = lambda q: scalar_gradient_arrays(q.x, q.y, q.z, q.t, params)
    h0 = default_step(params.a, params.m, params.gamma)
    box, _ = _wave_operator(gradient, p, h0)
    f = complex(scalar_field_arrays(p.x, p.y, p.z, p.t, params))
    mass_term = params.m ** 2 * f
    residual = abs(box + mass_term) / (abs(mass_term) + EPS)
    logger.debug(f"KG residual at {p} for {params}: {residual:.3e}")
    return float(residual)


def dalembert_residual(p: SpaceTimePoint, a: float, l: int, form: str = "direct") -> float:
    """Massless analogue: |box g_l| relative to the sum of the four |second derivative| terms."""
    gradient = lambda q: massless_gradient_arrays(q.x, q.y, q.z, q.t, a, l, form)
    box, scale = _wave_operator(gradient, p, default_step(a))
    residual = abs(box) / (scale + EPS)
    logger.debug(f"d'Alembert residual ({form}, l={l}) at {p}: {residual:.3e}")
    return float(residual)
