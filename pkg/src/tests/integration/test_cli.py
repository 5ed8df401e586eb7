# src/tests/integration/test_cli.py
import json

import numpy as np
import pandas as pd
import pytest


def _metadata(path):
    """'# key: json' header lines of a CSV export."""
    meta = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("# "):
                break
            key, _, value = line[2:].partition(": ")
            meta[key] = json.loads(value)
    return meta


def test_units(runner):
    result = runner.invoke(args=["units", "--m", "2"])
    assert result.exit_code == 0
    assert "compton_wavelength" in result.output
    assert "0.5 natural length" in result.output


def test_sample_maxwell_velocity_plane(runner, tmp_path):
    out = tmp_path / "vm.csv"
    result = runner.invoke(args=["sample", "--field", "v_maxwell", "--grid", "x=-2:2:101,y=-2:2:101",
                                 "--at", "z=0,t=0", "--out", str(out)])
    assert result.exit_code == 0, result.output
    frame = pd.read_csv(out, comment="#")
    assert len(frame) == 101 * 101
    assert list(frame.columns) == ["x", "y", "vx", "vy"]
    assert _metadata(out)["grid"]["fixed"] == {"z": 0.0, "t": 0.0}


def test_sample_upsilon_matches_closed_form(runner, tmp_path):
    out = tmp_path / "upsilon.csv"
    result = runner.invoke(args=["sample", "--field", "upsilon", "--grid", "x=-1:1:11,y=-1:1:11",
                                 "--at", "z=0,t=0", "--a", "1.5", "--out", str(out)])
    assert result.exit_code == 0, result.output
    frame = pd.read_csv(out, comment="#")
    upsilon = frame["upsilon_re"] + 1j * frame["upsilon_im"]
    expected = (frame["x"] + 1j * frame["y"]) / (-1.5j)
    assert np.allclose(upsilon, expected, atol=1e-10)


def test_sample_json_compton_units(runner, tmp_path):
    out = tmp_path / "f.json"
    result = runner.invoke(args=["sample", "--field", "f_l", "--grid", "x=-1:1:3", "--m", "2",
                                 "--format", "json", "--compton", "--out", str(out)])
    assert result.exit_code == 0, result.output
    body = json.loads(out.read_text())["body"]
    assert body["columns"] == ["x", "f_re", "f_im"]
    assert [row[0] for row in body["rows"]] == [-2.0, 0.0, 2.0]
    assert body["metadata"]["length_unit"] == "compton"


@pytest.mark.parametrize("args", [
    ["sample", "--field", "v_maxwell", "--v", "1.5"],
    ["sample", "--field", "f_l", "--grid", "x=1:-1:5"],
    ["sample", "--field", "nonsense"],
    ["trace", "--source", "velocity_maxwell", "--seeds", "1,0"],
])
def test_usage_errors_exit_with_two(runner, args):
    assert runner.invoke(args=args).exit_code == 2


def test_trace_reports_degenerate_seed(runner, tmp_path):
    out = tmp_path / "lines.csv"
    result = runner.invoke(args=["trace", "--source", "current_j_plus", "--l", "1",
                                 "--seeds", "0,0,0.5;1,0,0", "--arc-max", "2", "--no-link",
                                 "--out", str(out)])
    assert result.exit_code == 0, result.output
    seeds = _metadata(out)["summary"]["seeds"]
    assert [entry["status"] for entry in seeds] == ["error", "ok"]
    assert set(pd.read_csv(out, comment="#")["seed_index"]) == {1}


def test_trace_with_only_degenerate_seeds(runner, tmp_path):
    result = runner.invoke(args=["trace", "--source", "current_j_plus", "--l", "1",
                                 "--seeds", "0,0,0.5", "--arc-max", "2",
                                 "--out", str(tmp_path / "none.csv")])
    assert result.exit_code == 3


@pytest.mark.slow
def test_trace_maxwell_fibres_are_linked(runner, tmp_path):
    out = tmp_path / "fibres.csv"
    result = runner.invoke(args=["trace", "--source", "velocity_maxwell", "--seeds", "1,0,0;1.5,0,0",
                                 "--out", str(out)])
    assert result.exit_code == 0, result.output
    summary = _metadata(out)["summary"]
    assert all(entry["closure_metric"] < 1e-3 for entry in summary["seeds"])
    assert summary["linking"][0]["linking_number"] == pytest.approx(-1.0, abs=0.05)


def test_verify_impossible_tolerance_fails(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(args=["verify", "--only", "kg_residual", "--tol", "1e-30", "--out", str(out)])
    assert result.exit_code == 1
    body = json.loads(out.read_text())["body"]
    assert body["status"] == "fail"
    assert body["failed"] == ["kg_residual"]


def test_verify_is_deterministic(runner, tmp_path):
    bodies = []
    for name in ("one.json", "two.json"):
        out = tmp_path / name
        result = runner.invoke(args=["verify", "--only", "hopf_identity", "--rng-seed", "3",
                                     "--out", str(out)])
        assert result.exit_code == 0, result.output
        bodies.append(json.loads(out.read_text())["body"])
    assert bodies[0] == bodies[1]


def test_verify_with_no_matching_checks(runner, tmp_path):
    result = runner.invoke(args=["verify", "--only", "no_such_check", "--out", str(tmp_path / "r.json")])
    assert result.exit_code == 1


@pytest.mark.slow
def test_analyze_norm_sweep(runner, tmp_path):
    out = tmp_path / "norm.csv"
    result = runner.invoke(args=["analyze", "--analysis", "norm", "--l-list", "0,1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    frame = pd.read_csv(out, comment="#")
    assert len(frame) == 8
