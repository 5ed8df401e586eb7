# src/tests/unit/test_verification.py
from dataclasses import replace

import numpy as np
import pytest

from src.calculators.verification import topology_checks
from src.calculators.verification.runner import FULL_CHECKS, QUICK_CHECKS, run_check, run_suite
from src.calculators.verification.sampling import LEVELS, random_points
from src.calculators.verification.state_checks import check_normalization
from src.models.packet import BispinorKind
from src.utils.errors import DomainError


def check_broken(settings, rng, tol):
    raise RuntimeError("kernel exploded")


def test_random_points_stay_in_box():
    points = random_points(np.random.default_rng(0), 50, 2.0)
    assert len(points) == 50
    assert all(abs(p.x) <= 4.0 and abs(p.t) <= 2.0 for p in points)
    assert all(p.t == 0.0 for p in random_points(np.random.default_rng(0), 5, 1.0, with_time=False))


def test_full_suite_extends_quick_suite():
    assert FULL_CHECKS[:len(QUICK_CHECKS)] == QUICK_CHECKS
    assert LEVELS["full"].n_points > LEVELS["quick"].n_points


def test_exceptions_become_failed_checks():
    result = run_check(check_broken, LEVELS["quick"], np.random.default_rng(0), None)
    assert result.test_name == "broken"
    assert not result.is_valid
    assert "kernel exploded" in result.details["error"]


def test_single_check_passes():
    report = run_suite("quick", only=["kg_residual"])
    assert [check.test_name for check in report.checks] == ["kg_residual"]
    assert report.passed


def test_impossible_tolerance_fails_by_name():
    report = run_suite("quick", tol=1e-30, only=["kg_residual", "null_field"])
    assert not report.passed
    assert set(report.failed_checks) == {"kg_residual", "null_field"}


def test_report_body_is_deterministic():
    first = run_suite("quick", rng_seed=7, only=["hopf_identity"]).body()
    second = run_suite("quick", rng_seed=7, only=["hopf_identity"]).body()
    assert first == second


def test_unknown_level():
    with pytest.raises(DomainError):
        run_suite("exhaustive")


@pytest.mark.slow
def test_quick_suite_passes():
    report = run_suite("quick")
    assert report.passed, report.failed_checks


def test_full_normalization_covers_every_kind():
    assert set(LEVELS["full"].norm_kinds) == set(BispinorKind)
    assert set(LEVELS["quick"].norm_kinds) <= set(BispinorKind)


@pytest.mark.slow
def test_normalization_check_measures_each_kind():
    settings = replace(LEVELS["quick"], norm_cases=((0, 1.0, 1.0),),
                       norm_kinds=tuple(BispinorKind), velocities=(0.0,))
    result = check_normalization(settings, np.random.default_rng(0))
    assert result.is_valid
    for kind in BispinorKind:
        assert f"position:{kind.value},l=0,a=1.0,m=1.0" in result.measurements


@pytest.mark.parametrize("link,valid", [(-1.0, True), (-0.97, True), (1.0, False)])
def test_hopf_fibre_check_uses_signed_linking(monkeypatch, link, valid):
    metrics = iter([1e-6, 1e-6, 1e-2])
    monkeypatch.setattr(topology_checks, "trace_line", lambda *args: None)
    monkeypatch.setattr(topology_checks, "closure_metric", lambda trace: next(metrics))
    monkeypatch.setattr(topology_checks, "linking_number", lambda first, second: link)
    result = topology_checks.check_hopf_fibres(LEVELS["quick"], np.random.default_rng(0))
    assert result.is_valid is valid
    assert result.errors["linking"] == pytest.approx(abs(link + 1.0))
