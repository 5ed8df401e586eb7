# src/tests/unit/test_numerics_kernel.py
import math

import numpy as np
import pytest
from scipy import special

from src.calculators.numerics_kernel import quadrature
from src.calculators.numerics_kernel.bessel import bessel_k, bessel_k_scaled, bessel_k_table, crossover_check
from src.calculators.numerics_kernel.ode import ode_trace
from src.calculators.numerics_kernel.quadrature import integrate_1d, integrate_3d
from src.calculators.numerics_kernel.richardson import richardson_derivative
from src.utils.errors import DegeneratePointError, DomainError


# ----- Bessel ------------------------------------------------------------------ #
@pytest.mark.parametrize("z", [0.05, 0.7, 1.99, 2.01, 4.5, 30.0])
@pytest.mark.parametrize("nu", [0, 1, 2, 3, 5])
def test_bessel_k_matches_scipy_on_real_axis(nu, z):
    assert bessel_k(nu, z).real == pytest.approx(special.kv(nu, z), rel=1e-12)


@pytest.mark.parametrize("z", [0.3 + 0.8j, 1.5 - 1.2j, 2.0 + 0.5j, 3.0 + 4.0j, 12.0 - 9.0j])
def test_bessel_k_matches_scipy_for_complex_argument(z):
    for nu in range(5):
        assert abs(bessel_k(nu, z) - special.kv(nu, z)) <= 1e-10 * abs(special.kv(nu, z))


def test_bessel_table_layout_and_scaling():
    z = np.array([[0.5, 1.0], [2.5 + 1j, 7.0]])
    table = bessel_k_table(4, z)
    assert table.shape == (2, 2, 5)
    assert table[1, 0, 3] == pytest.approx(bessel_k_scaled(3, 2.5 + 1j))
    assert bessel_k_scaled(2, 40.0).real == pytest.approx(special.kve(2, 40.0), rel=1e-12)


def test_crossover_branches_agree():
    assert crossover_check(2.0 + 0.3j, rel_tol=1e-10) < 1e-10


@pytest.mark.parametrize("z", [0.0, -1.0, -2.0 + 1.0j, complex(np.nan, 0.0)])
def test_bessel_rejects_left_half_plane(z):
    with pytest.raises(DomainError):
        bessel_k(1, z)


@pytest.mark.parametrize("z", [0.4 + 0.9j, 1.7 - 0.6j, 2.5 + 3.0j, 9.0 - 4.0j])
def test_bessel_k_conjugate_symmetry(z):
    for nu in range(5):
        assert bessel_k(nu, z.conjugate()) == pytest.approx(bessel_k(nu, z).conjugate(), rel=1e-12)


def test_bessel_k_recurrence_at_random_arguments():
    rng = np.random.default_rng(17)
    for z in rng.uniform(0.5, 8.0, 12) + 1j * rng.uniform(-6.0, 6.0, 12):
        for nu in range(1, 5):
            lhs = bessel_k(nu + 1, z) - bessel_k(nu - 1, z)
            assert abs(lhs - 2 * nu / z * bessel_k(nu, z)) <= 1e-10 * abs(bessel_k(nu + 1, z))


def test_bessel_k0_integral_representation():
    z = 1.5 + 0.5j
    integrand = lambda s: np.exp(-z * math.cosh(s)) if s < 50.0 else 0j
    result = integrate_1d(integrand, 0.0, math.inf, decay=1.0)
    assert result.value == pytest.approx(bessel_k(0, z), rel=1e-9)


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_bessel_k_derivative_identity(nu):
    derivative = richardson_derivative(lambda x: bessel_k(nu, x), 2.0).value
    expected = -0.5 * (bessel_k(nu - 1, 2.0) + bessel_k(nu + 1, 2.0))
    assert derivative == pytest.approx(expected, rel=1e-8)


# ----- Richardson ---------------------------------------------------------------- #
def test_first_derivative_of_sine():
    result = richardson_derivative(np.sin, 0.3)
    assert result.value.real == pytest.approx(math.cos(0.3), abs=1e-10)
    assert not result.flagged


def test_second_derivative_of_exponential():
    result = richardson_derivative(np.exp, 0.5, order=2)
    assert result.value.real == pytest.approx(math.exp(0.5), rel=1e-7)


# ----- quadrature ------------------------------------------------------------------ #
def test_integrate_1d_semi_infinite_exponential():
    result = integrate_1d(lambda x: math.exp(-x), 0.0, math.inf, decay=1.0)
    assert result.value == pytest.approx(1.0, abs=1e-10)


def test_integrate_1d_complex_integrand():
    result = integrate_1d(lambda x: np.exp(-(1 + 1j) * x), 0.0, math.inf, decay=1.0)
    assert result.value == pytest.approx(0.5 - 0.5j, abs=1e-10)


def test_integrate_3d_gaussian():
    result = integrate_3d(lambda x, y, z: np.exp(-(x * x + y * y + z * z)), radius=8.0)
    assert result.value == pytest.approx(math.pi ** 1.5, rel=1e-7)


def test_integrate_3d_axisymmetric_matches_full_rule():
    f = lambda x, y, z: (x * x + y * y) * np.exp(-(x * x + y * y + 2 * z * z))
    full = integrate_3d(f, radius=8.0).value
    axial = integrate_3d(f, radius=8.0, axisymmetric=True).value
    assert axial == pytest.approx(full, rel=1e-7)


def test_integrate_3d_odd_integrand_vanishes():
    result = integrate_3d(lambda x, y, z: (x + z) * np.exp(-(x * x + y * y + z * z)), radius=8.0)
    assert abs(result.value) < 1e-10


def test_integrate_3d_refines_only_unresolved_dimensions(monkeypatch):
    calls = []
    original = quadrature._spherical_rule

    def recording(f, radius, panels, n_mu, n_phi, axisymmetric):
        calls.append((panels, n_mu, n_phi))
        return original(f, radius, panels, n_mu, n_phi, axisymmetric)

    monkeypatch.setattr(quadrature, "_spherical_rule", recording)
    result = integrate_3d(lambda x, y, z: np.exp(-(x * x + y * y + z * z)), radius=8.0)
    assert result.value == pytest.approx(math.pi ** 1.5, rel=1e-7)
    # isotropic: the angular rules never grow past their starting size
    assert all(n_mu <= 16 and n_phi <= 16 for _, n_mu, n_phi in calls)
    assert len(calls) == len(set(calls))


# ----- ODE ---------------------------------------------------------------------------- #
def test_ode_trace_closes_a_circle():
    trace = ode_trace(lambda r: np.array([-r[1], r[0], 0.0]), (1.0, 0.0, 0.0), arc_max=2 * math.pi)
    assert trace.arc[-1] == pytest.approx(2 * math.pi, abs=1e-10)
    assert np.allclose(trace.points[-1], [1.0, 0.0, 0.0], atol=1e-8)
    assert not trace.failed


def test_ode_trace_constant_field_endpoint():
    field = lambda r: np.array([0.0, 0.0, 1.0])
    by_arc = ode_trace(field, (0.2, -0.1, 0.0), arc_max=2.5)
    assert np.allclose(by_arc.points[-1], [0.2, -0.1, 2.5], atol=1e-10)
    by_parameter = ode_trace(field, (0.0, 0.0, 0.0), lambda_max=1.5)
    assert np.allclose(by_parameter.points[-1], [0.0, 0.0, 1.5], atol=1e-10)
    assert by_parameter.arc[-1] == pytest.approx(1.5, abs=1e-10)


def test_ode_trace_refuses_zero_field_at_seed():
    with pytest.raises(DegeneratePointError):
        ode_trace(lambda r: np.zeros(3), (0.0, 0.0, 0.0), lambda_max=1.0)


def test_ode_trace_requires_a_stop_criterion():
    with pytest.raises(DomainError):
        ode_trace(lambda r: np.ones(3), (0.0, 0.0, 0.0))
