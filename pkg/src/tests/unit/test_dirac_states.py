# src/tests/unit/test_dirac_states.py
import math

import numpy as np
import pytest
from scipy import special

from src.calculators.dirac_states.bispinor import bispinor, bispinor_arrays, bispinor_field
from src.calculators.dirac_states.checks import (
    current_conservation_residual,
    dirac_residual,
    fierz_residual,
    mz_check,
)
from src.calculators.dirac_states.current import four_current, four_current_arrays
from src.calculators.dirac_states.gamma import gamma_algebra
from src.calculators.dirac_states.norm import norm_integral, total_charge
from src.calculators.dirac_states.normalization import doppler_factor, normalization_constant
from src.calculators.dirac_states.rotation import rotate_pi_x
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.tests.conftest import sample_points
from src.utils.errors import DomainError

KINDS = list(BispinorKind)
POINT = SpaceTimePoint(0.4, -0.3, 0.25, 0.2)


def test_gamma_matrices_satisfy_clifford_algebra():
    algebra = gamma_algebra()
    metric = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            anti = algebra.gamma[mu] @ algebra.gamma[nu] + algebra.gamma[nu] @ algebra.gamma[mu]
            assert np.allclose(anti, 2 * metric[mu, nu] * np.eye(4))
        assert np.allclose(algebra.gamma5 @ algebra.gamma[mu], -algebra.gamma[mu] @ algebra.gamma5)
    assert np.allclose(algebra.gamma5 @ algebra.gamma5, np.eye(4))
    commutator = algebra.gamma[1] @ algebra.gamma[2] - algebra.gamma[2] @ algebra.gamma[1]
    assert np.allclose(0.5j * commutator, algebra.spin_z)
    assert not algebra.gamma[0].flags.writeable


def test_normalization_constant_for_ground_state():
    const = normalization_constant(BispinorKind.PSI_PLUS, PacketParams(m=1.0, a=1.0, l=0))
    assert const.N == pytest.approx(1.0 / math.sqrt(2 * math.pi ** 2 * special.kv(2, 2.0)), rel=1e-12)
    assert const.l_effective == 0


def test_phi_states_use_next_winding():
    const = normalization_constant(BispinorKind.PHI_PLUS, PacketParams(l=1))
    assert const.l_effective == 2


def test_doppler_factors_are_reciprocal():
    plus = doppler_factor(BispinorKind.PSI_PLUS, 0.6)
    minus = doppler_factor(BispinorKind.PSI_MINUS, 0.6)
    assert plus * minus == pytest.approx(1.0)
    assert plus == pytest.approx(2.0)
    assert doppler_factor(BispinorKind.PHI_MINUS, 0.6) == pytest.approx(plus)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("l", [0, 1])
@pytest.mark.parametrize("v", [0.0, 0.5])
def test_dirac_equation(kind, l, v):
    params = PacketParams(m=1.0, a=1.0, l=l, v=v)
    for p in sample_points(3, seed=21):
        assert dirac_residual(kind, p, params) < 1e-6


@pytest.mark.parametrize("kind", [BispinorKind.PSI_PLUS, BispinorKind.PSI_MINUS])
@pytest.mark.parametrize("l", [0, 2])
def test_closed_form_current_matches_bilinear(kind, l):
    params = PacketParams(m=0.8, a=1.2, l=l, v=0.3)
    for p in sample_points(5, seed=3):
        bilinear = four_current(kind, p, params, path="bilinear").as_array()
        closed = four_current(kind, p, params, path="closed_form").as_array()
        assert np.allclose(closed, bilinear, rtol=1e-12, atol=1e-14 * bilinear[0])


def test_closed_form_current_not_defined_for_phi():
    with pytest.raises(DomainError):
        four_current(BispinorKind.PHI_PLUS, POINT, PacketParams(), path="closed_form")


@pytest.mark.parametrize("kind", KINDS)
def test_current_is_causal_and_conserved(kind):
    params = PacketParams(l=1, v=0.5)
    for p in sample_points(3, seed=8):
        j = four_current(kind, p, params)
        assert j.interval >= -1e-12 * j.j0 ** 2
        assert current_conservation_residual(kind, p, params) < 1e-6


def test_conservation_residual_is_relative_to_mass_times_charge():
    spinor = np.array([1.0, 0.5j, 0.2, 0.0], dtype=complex)
    # j scales as e^(2t): d_t j0 = 2 j0 and div j = 0
    field = lambda q: math.exp(q.t) * spinor
    residual = current_conservation_residual(BispinorKind.PSI_PLUS, POINT, PacketParams(m=0.5), field=field)
    assert residual == pytest.approx(4.0, rel=1e-8)


def test_fierz_identity_holds_for_every_kind():
    params = PacketParams(l=1, v=0.2)
    for kind in KINDS:
        psi = bispinor_arrays(kind, POINT.x, POINT.y, POINT.z, POINT.t, params)
        assert fierz_residual(psi) < 1e-10


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("l", [0, 1, 2])
def test_mz_eigenvalue_and_flip(kind, l):
    params = PacketParams(l=l)
    assert mz_check(kind, POINT, params).real == pytest.approx(l + 0.5, abs=1e-6)
    flipped = rotate_pi_x(kind, params)
    assert mz_check(kind, POINT, params, field=flipped).real == pytest.approx(-(l + 0.5), abs=1e-6)


def test_two_half_turns_flip_the_sign():
    params = PacketParams(l=1)
    kind = BispinorKind.PSI_MINUS
    twice = rotate_pi_x(kind, params, field=rotate_pi_x(kind, params))
    assert np.allclose(twice(POINT), -bispinor_field(kind, params, normalized=False)(POINT), rtol=1e-13)


def test_bispinor_model_accessors():
    psi = bispinor(BispinorKind.PSI_PLUS, POINT, PacketParams())
    assert psi.psi2 == 0
    assert np.array_equal(psi.phi, psi.components[:2])


@pytest.mark.slow
@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("l,a", [(0, 1.0), (1, 0.5), (2, 2.0)])
def test_position_space_norm(kind, l, a):
    assert norm_integral(kind, PacketParams(m=1.0, a=a, l=l)) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("kind", KINDS)
def test_boosted_total_charge(kind):
    result = total_charge(kind, PacketParams(m=1.0, a=1.0, l=0, v=0.5))
    assert result.value == pytest.approx(1.0, abs=1e-6)


def test_norm_integral_rejects_boost():
    with pytest.raises(DomainError):
        norm_integral(BispinorKind.PSI_PLUS, PacketParams(v=0.1))


def test_current_array_shape():
    x = np.linspace(-1, 1, 5)
    j = four_current_arrays(BispinorKind.PHI_MINUS, x, 0.0, 0.3, 0.0, PacketParams())
    assert j.shape == (5, 4)
