# src/tests/unit/test_topology.py
import math

import numpy as np
import pytest

from src.calculators.dirac_states.current import four_current
from src.calculators.maxwell_hopfion.rs_field import velocity_maxwell
from src.calculators.topology.linking import linking_number
from src.calculators.topology.tracing import (
    TraceStop,
    arc_at,
    closure_metric,
    default_stop,
    first_return,
    loop_sampler,
    seed_family,
    trace_diameter,
    trace_line,
)
from src.calculators.topology.velocity import (
    hopf_closed_form,
    hopf_level_line,
    hopf_map,
    hopf_map_arrays,
    velocity_dirac,
    velocity_gap,
)
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.models.trace import StreamlineTrace
from src.tests.conftest import sample_points
from src.utils.errors import ClosureError, DegeneratePointError, DomainError, TraceError, TraceProximityError

REST = PacketParams(m=1.0, a=1.0, l=0)


def _circle(n=400, center=(0.0, 0.0, 0.0), plane="xy"):
    theta = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    c, s = np.cos(theta), np.sin(theta)
    zero = np.zeros(n)
    loop = np.column_stack([c, s, zero]) if plane == "xy" else np.column_stack([c, zero, -s])
    return loop + np.asarray(center)


def _manual_trace(points, parameter):
    arc = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(points, axis=0), axis=1))])
    return StreamlineTrace(points=points, lambdas=parameter, arc=arc, seed=tuple(points[0]))


# ----- velocity fields ---------------------------------------------------------------- #
@pytest.mark.parametrize("l", [0, 1, 2])
def test_dirac_velocity_is_current_ratio_and_subluminal(l):
    params = PacketParams(m=1.0, a=1.0, l=l)
    for p in sample_points(6, seed=41):
        j = four_current(BispinorKind.PSI_PLUS, p, params, path="closed_form").as_array()
        v = velocity_dirac(p, params)
        assert np.allclose(v, j[1:] / j[0], rtol=1e-9, atol=1e-12)
        assert np.linalg.norm(v) < 1.0


def test_velocity_closed_form_rest_frame_only():
    with pytest.raises(DomainError):
        velocity_dirac(SpaceTimePoint(), PacketParams(v=0.2))


def test_velocity_gap_shrinks_with_mass():
    p = SpaceTimePoint(0.7, -0.4, 0.3, 0.0)
    gaps = [velocity_gap(p, PacketParams(m=m, a=1.0)) for m in (1.0, 0.1, 0.01)]
    assert gaps[0] > gaps[1] > gaps[2]


# ----- Hopf map --------------------------------------------------------------------- #
def test_hopf_map_poles():
    assert hopf_map((0.0, 0.0, -1.0)).upsilon == 0
    assert hopf_map((0.0, 0.0, 1.0)).is_infinite
    assert np.isinf(hopf_map_arrays(np.array([[0.0, 0.0, 1.0]]))[0])


def test_hopf_map_rejects_superluminal_velocity():
    with pytest.raises(DomainError):
        hopf_map((1.0, 1.0, 0.0))


def test_both_velocities_share_the_hopf_map():
    for p in sample_points(10, seed=42):
        expected = hopf_closed_form(p, 1.0)
        for v in (velocity_dirac(p, REST), velocity_maxwell(p, 1.0)):
            assert abs(hopf_map(v).upsilon - expected) <= 1e-10 * max(1.0, abs(expected))


def test_level_line_through_imaginary_unit():
    line = hopf_level_line(1j, 0.0, 1.0, z_range=(-2.0, 2.0), n=5)
    assert np.allclose(line[:, 0], 1.0)
    assert np.allclose(line[:, 1], -line[:, 2])


def test_level_line_points_map_back():
    upsilon = 0.7 + 0.2j
    for x, y, z in hopf_level_line(upsilon, 0.4, 1.2, n=20):
        assert hopf_closed_form(SpaceTimePoint(x, y, z, 0.4), 1.2) == pytest.approx(upsilon, abs=1e-9)


def test_level_line_needs_finite_value():
    with pytest.raises(DomainError):
        hopf_level_line(None, 0.0, 1.0)


# ----- closure ----------------------------------------------------------------------- #
def test_exact_circle_is_closed():
    theta = np.linspace(0.0, 4 * math.pi, 2001)
    trace = _manual_trace(np.column_stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)]), theta)
    assert closure_metric(trace) < 1e-12
    assert first_return(trace) == pytest.approx(2 * math.pi, abs=1e-9)


def test_helix_closure_is_pitch_over_diameter():
    theta = np.linspace(0.0, 3 * math.pi, 3001)
    points = np.column_stack([np.cos(theta), np.sin(theta), 0.1 * theta / (2 * math.pi)])
    trace = _manual_trace(points, theta)
    assert closure_metric(trace) == pytest.approx(0.1 / trace_diameter(points), rel=1e-2)
    with pytest.raises(ClosureError):
        loop_sampler(trace)


def test_aborted_trace_is_not_a_loop():
    theta = np.linspace(0.0, 4 * math.pi, 2001)
    trace = _manual_trace(np.column_stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)]), theta)
    trace.failed, trace.message = True, "step failed"
    with pytest.raises(TraceError):
        loop_sampler(trace)


def test_trace_that_never_departs():
    points = np.zeros((5, 3))
    trace = StreamlineTrace(points=points, lambdas=np.arange(5.0), arc=np.zeros(5), seed=(0.0, 0.0, 0.0))
    with pytest.raises(ClosureError):
        closure_metric(trace)


def test_seed_family_and_default_stop():
    seeds = seed_family(2.0)
    assert seeds == [(1.0, 0.0, 0.0), (2.0, 0.0, 0.0), (3.0, 0.0, 0.0)]
    assert default_stop(PacketParams(a=2.0), seeds[-1]).arc_max == pytest.approx(12 * math.pi)
    with pytest.raises(DomainError):
        TraceStop()


def test_unknown_trace_source():
    with pytest.raises(DomainError):
        trace_line("velocity_photon", (1.0, 0.0, 0.0), 0.0, REST)


def test_current_line_degenerate_on_axis():
    with pytest.raises(DegeneratePointError):
        trace_line("current_j_plus", (0.0, 0.0, 0.5), 0.0, PacketParams(l=1))


# ----- linking ------------------------------------------------------------------------ #
@pytest.mark.parametrize("method", ["gauss", "solid_angle"])
def test_hopf_link(method):
    ring = _circle()
    partner = _circle(center=(1.0, 0.0, 0.0), plane="xz")
    assert linking_number(ring, partner, method=method) == pytest.approx(1.0, abs=1e-2)
    assert linking_number(ring, partner[::-1], method=method) == pytest.approx(-1.0, abs=1e-2)


@pytest.mark.parametrize("method", ["gauss", "solid_angle"])
def test_separate_circles_do_not_link(method):
    assert linking_number(_circle(), _circle(center=(5.0, 0.0, 0.0)), method=method) == pytest.approx(0.0, abs=1e-2)


def test_touching_curves_are_rejected():
    with pytest.raises(TraceProximityError):
        linking_number(_circle(), _circle(plane="xz"))


def test_unknown_linking_method():
    with pytest.raises(DomainError):
        linking_number(_circle(), _circle(center=(5.0, 0.0, 0.0)), method="writhe")


@pytest.mark.slow
def test_maxwell_fibres_are_linked_rings():
    params = PacketParams(a=1.0)
    traces = [trace_line("velocity_maxwell", seed, 0.0, params) for seed in seed_family(1.0, (1.0, 1.5))]
    for trace in traces:
        assert trace.closed_hint
        assert closure_metric(trace) < 1e-3
    assert linking_number(*traces) == pytest.approx(-1.0, abs=0.05)


@pytest.mark.slow
def test_fibre_through_ring_seed_is_the_unit_circle():
    trace = trace_line("velocity_maxwell", (1.0, 0.0, 0.0), 0.0, PacketParams(a=1.0))
    radius = np.hypot(trace.points[:, 0], trace.points[:, 1])
    assert np.allclose(radius, 1.0, atol=1e-6)
    assert np.allclose(trace.points[:, 2], 0.0, atol=1e-6)
    assert arc_at(trace, first_return(trace)) == pytest.approx(2 * math.pi, rel=1e-6)


@pytest.mark.slow
def test_dirac_lines_wind_instead_of_closing():
    params = PacketParams(m=1.0, a=1.0)
    seed = (1.5, 0.0, 0.0)
    dirac = trace_line("velocity_dirac", seed, 0.0, params)
    maxwell = trace_line("velocity_maxwell", seed, 0.0, params)
    assert closure_metric(dirac) > 10 * closure_metric(maxwell)
