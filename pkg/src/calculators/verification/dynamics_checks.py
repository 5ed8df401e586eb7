# src/calculators/verification/dynamics_checks.py
"""Spreading law, uncertainty product and relativistic contraction."""
import logging
from typing import Optional

import numpy as np

from src.calculators.dynamics.moments import spatial_moment, spreading_fit, uncertainty_product
from src.calculators.dynamics.momentum import mean_square_radius_oracle, spreading_coefficient_b
from src.calculators.dynamics.profile import charge_profile
from src.calculators.verification.sampling import SuiteSettings
from src.models.dynamics import NONRELATIVISTIC_BOUND
from src.models.grid import GridSpec
from src.models.packet import BispinorKind, PacketParams
from src.models.qc_result import QCResult
from src.utils.tolerance import get_tolerance

logger = logging.getLogger(__name__)

CONTRACTION_VELOCITIES = (0.0, 0.9, 0.99)
PROFILE_GRID = "x=-4:4:161,z=-4:4:321"


def check_radius_oracle(settings: SuiteSettings, rng: np.random.Generator,
                        tol: Optional[float] = None) -> QCResult:
    """<r^2> by 3D quadrature against the momentum-space closed form, and t -> -t symmetry."""
    result = QCResult("mean_square_radius").set_validity(True)
    params = PacketParams()
    for t in (0.0, 1.0):
        value = spatial_moment(BispinorKind.PSI_PLUS, params, t).value
        oracle = mean_square_radius_oracle(params, t)
        result.add_measurement(f"t={t}", value).add_theoretical(f"t={t}", oracle)
        result.check_below(f"oracle:t={t}", abs(value - oracle) / oracle,
                           get_tolerance("radius_oracle", tol))
    forward = spatial_moment(BispinorKind.PSI_PLUS, params, 1.0).value
    backward = spatial_moment(BispinorKind.PSI_PLUS, params, -1.0).value
    result.check_below("time_symmetry", abs(forward - backward) / forward,
                       get_tolerance("time_symmetry", tol))
    return result


def check_spreading(settings: SuiteSettings, rng: np.random.Generator,
                    tol: Optional[float] = None, workers: int = 1) -> QCResult:
    result = QCResult("spreading_law").set_validity(True)
    for l in settings.l_values:
        b_values = []
        for a in settings.spreading_sizes:
            params = PacketParams(a=a, l=l)
            fit = spreading_fit(BispinorKind.PSI_PLUS, params, workers=workers)
            exact_b = spreading_coefficient_b(BispinorKind.PSI_PLUS, params)
            label = f"l={l},a={a}"
            result.add_measurement(f"B:{label}", fit.B).add_measurement(f"A:{label}", fit.A)
            result.check_below(f"fit:{label}", fit.fit_residual, get_tolerance("spreading_fit", tol))
            result.check_below(f"B_exact:{label}", abs(fit.B - exact_b) / exact_b,
                               get_tolerance("spreading_b", tol))
            if not 0.0 < fit.B < 1.0:
                result.set_validity(False).add_detail(f"bounds:{label}", fit.B)
            b_values.append(fit.B)
        if not all(b < a for a, b in zip(b_values, b_values[1:])):
            result.set_validity(False).add_detail(f"monotone:l={l}", b_values)
    return result


def check_uncertainty(settings: SuiteSettings, rng: np.random.Generator,
                      tol: Optional[float] = None) -> QCResult:
    result = QCResult("uncertainty").set_validity(True)
    products = []
    for a in settings.uncertainty_sizes:
        product = uncertainty_product(BispinorKind.PSI_PLUS, PacketParams(a=a))
        products.append(product.product)
        for name, value in product.products().items():
            result.add_measurement(f"{name}:a={a}", value)
    result.add_theoretical("limit", NONRELATIVISTIC_BOUND)
    if not all(p > NONRELATIVISTIC_BOUND for p in products):
        result.set_validity(False).add_detail("heisenberg", "product at or below 3/2")
    if not all(b < a for a, b in zip(products, products[1:])):
        result.set_validity(False).add_detail("monotone", products)
    result.check_below("limit", products[-1] / NONRELATIVISTIC_BOUND - 1.0,
                       get_tolerance("uncertainty_limit", tol))
    return result


def check_contraction(settings: SuiteSettings, rng: np.random.Generator,
                      tol: Optional[float] = None) -> QCResult:
    result = QCResult("boost_contraction").set_validity(True)
    grid = GridSpec.parse(PROFILE_GRID)
    ratios = []
    for v in CONTRACTION_VELOCITIES:
        profile = charge_profile(BispinorKind.PSI_PLUS, PacketParams(v=v), grid)
        ratios.append(profile.z_to_x_ratio)
        result.add_measurement(f"z_to_x:v={v}", profile.z_to_x_ratio)
    if not all(b < a for a, b in zip(ratios, ratios[1:])):
        result.set_validity(False).add_detail("contraction", ratios)
    return result
