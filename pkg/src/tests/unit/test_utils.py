# src/tests/unit/test_utils.py
import json

import numpy as np
import pandas as pd
import pytest

from src.utils.errors import DomainError
from src.utils.export import frame_to_csv_text, json_text, write_document, write_frame
from src.utils.linalg import safe_inverse
from src.utils.tolerance import TOLERANCES, get_tolerance
from src.utils.workers import parallel_map


def test_tolerance_lookup_and_override():
    assert get_tolerance("kg_residual") == TOLERANCES["kg_residual"]
    assert get_tolerance("kg_residual", 1e-30) == 1e-30
    with pytest.raises(DomainError):
        get_tolerance("no_such_check")
    with pytest.raises(DomainError):
        get_tolerance("linking", 0.0)


def test_safe_inverse():
    mat = np.array([[2.0, 0.0], [0.0, 4.0]])
    assert np.allclose(safe_inverse(mat, ridge=0.0), [[0.5, 0.0], [0.0, 0.25]])


def test_parallel_map_keeps_order():
    assert parallel_map(lambda x: x * x, range(6), workers=3) == [0, 1, 4, 9, 16, 25]
    assert parallel_map(lambda x: x + 1, [1], workers=4) == [2]


def test_csv_text_has_metadata_then_columns():
    frame = pd.DataFrame({"x": [0.1, 1.0 / 3.0], "vx": [1.0, -2.0]})
    text = frame_to_csv_text(frame, {"params": {"a": 1.0}, "grid": "x"})
    lines = text.splitlines()
    assert lines[0] == '# grid: "x"'
    assert lines[1] == '# params: {"a": 1.0}'
    assert lines[2] == "x,vx"
    assert lines[4].startswith("0.333333333333333")


def test_json_text_keeps_timestamp_in_header():
    document = json.loads(json_text({"b": 1, "a": np.float64(2.0)}, {"wall_time": 0.1}))
    assert document["body"] == {"a": 2.0, "b": 1}
    assert "generated" in document["header"]


def test_write_frame_round_trips_through_pandas(tmp_path):
    frame = pd.DataFrame({"x": np.linspace(0, 1, 4), "value": np.arange(4.0)})
    target = tmp_path / "out.csv"
    write_frame(frame, target, "csv", {"kind": "psi_plus"})
    loaded = pd.read_csv(target, comment="#")
    assert list(loaded.columns) == ["x", "value"]
    assert np.allclose(loaded["x"], frame["x"])


def test_write_rejects_bad_targets(tmp_path):
    frame = pd.DataFrame({"x": [1.0]})
    with pytest.raises(DomainError):
        write_frame(frame, tmp_path, "csv")
    with pytest.raises(DomainError):
        write_frame(frame, tmp_path / "missing" / "out.csv", "csv")
    with pytest.raises(DomainError):
        write_frame(frame, tmp_path / "out.txt", "xml")


def test_write_document(tmp_path):
    target = tmp_path / "report.json"
    write_document({"status": "pass"}, target)
    assert json.loads(target.read_text())["body"] == {"status": "pass"}
