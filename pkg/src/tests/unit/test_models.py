# src/tests/unit/test_models.py
import numpy as np
import pytest

from src.models.fields import Bispinor, FourCurrent, HopfValue
from src.models.grid import GridSpec
from src.models.numerics import ToleranceConfig
from src.models.packet import BispinorKind, PacketParams, SpaceTimePoint
from src.models.qc_result import QCResult, RunReport, convert_numpy
from src.models.trace import StreamlineTrace
from src.utils.errors import DomainError


class TestPacketParams:
    def test_defaults(self):
        params = PacketParams()
        assert params.to_dict() == {"m": 1.0, "a": 1.0, "l": 0, "v": 0.0}
        assert params.gamma == 1.0
        assert PacketParams(m=4.0).compton == 0.25

    @pytest.mark.parametrize("kwargs", [
        {"m": 0.0}, {"a": -1.0}, {"l": -1}, {"l": 1.5}, {"v": 1.0}, {"v": -1.2},
    ])
    def test_rejects_out_of_domain(self, kwargs):
        with pytest.raises(DomainError):
            PacketParams(**kwargs)

    def test_lorentz_factor(self):
        assert PacketParams(v=0.6).gamma == pytest.approx(1.25)


class TestBispinorKind:
    @pytest.mark.parametrize("text,kind", [
        ("psi_plus", BispinorKind.PSI_PLUS),
        ("Psi+", BispinorKind.PSI_PLUS),
        ("psi-", BispinorKind.PSI_MINUS),
        ("phi-plus", BispinorKind.PHI_PLUS),
        (" PHI- ", BispinorKind.PHI_MINUS),
    ])
    def test_parse(self, text, kind):
        assert BispinorKind.parse(text) is kind

    def test_parse_unknown(self):
        with pytest.raises(DomainError):
            BispinorKind.parse("chi+")

    def test_flags(self):
        assert BispinorKind.PHI_MINUS.is_phi
        assert BispinorKind.PHI_MINUS.sign == -1
        assert not BispinorKind.PSI_PLUS.is_phi


class TestSpaceTimePoint:
    def test_shifted_leaves_original(self):
        p = SpaceTimePoint(1.0, 2.0, 3.0, 4.0)
        q = p.shifted("z", 0.5)
        assert q.z == 3.5 and p.z == 3.0
        assert p.rho2 == 5.0 and p.r2 == 14.0

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            SpaceTimePoint(x=float("nan"))


class TestGridSpec:
    def test_parse_and_mesh(self):
        grid = GridSpec.parse("x=-1:1:3,z=0:2:5", at="y=0.5,t=1")
        assert grid.names == ("x", "z")
        assert grid.shape == (3, 5)
        mesh = grid.mesh()
        assert mesh["x"].size == 15
        assert np.all(mesh["y"] == 0.5) and np.all(mesh["t"] == 1.0)
        # first axis outermost
        assert list(mesh["x"][:5]) == [-1.0] * 5
        assert grid.to_dict()["fixed"] == {"y": 0.5, "t": 1.0}

    @pytest.mark.parametrize("text,at", [
        ("x=-1:1", ""),
        ("x=1:-1:5", ""),
        ("x=-1:1:5,x=0:1:5", ""),
        ("w=0:1:5", ""),
        ("x=0:1:5", "x=0"),
        ("x=0:1:5", "t"),
    ])
    def test_rejects_bad_specs(self, text, at):
        with pytest.raises(DomainError):
            GridSpec.parse(text, at=at)


class TestModelsValidation:
    def test_bispinor_shape(self):
        with pytest.raises(DomainError):
            Bispinor(np.zeros(3))

    def test_current_interval(self):
        j = FourCurrent(2.0, 1.0, 0.0, 1.0)
        assert j.interval == pytest.approx(2.0)
        with pytest.raises(DomainError):
            FourCurrent(-1.0, 0.0, 0.0, 0.0)

    def test_hopf_value(self):
        assert HopfValue().is_infinite
        assert not HopfValue(0.5j).is_infinite

    def test_tolerance_config(self):
        assert ToleranceConfig.quadrature_3d().rel_tol == 1e-7
        with pytest.raises(DomainError):
            ToleranceConfig(rel_tol=0.0)

    def test_trace_validation(self):
        with pytest.raises(DomainError):
            StreamlineTrace(points=np.zeros((3, 3)), lambdas=[0.0, 1.0, 1.0], arc=np.zeros(3),
                            seed=(0.0, 0.0, 0.0))

    def test_trace_resample_and_truncate(self):
        points = np.column_stack([np.linspace(0, 4, 5), np.zeros(5), np.zeros(5)])
        trace = StreamlineTrace(points=points, lambdas=np.arange(5.0), arc=np.arange(5.0),
                                seed=(0.0, 0.0, 0.0))
        assert np.allclose(trace.resample(3)[:, 0], [0.0, 2.0, 4.0])
        short = trace.truncated(2.5)
        assert short.length == 2.5
        assert short.points[-1, 0] == pytest.approx(2.5)


class TestReports:
    def test_convert_numpy(self):
        converted = convert_numpy({"a": np.float64(1.5), "b": np.array([1, 2]), "c": 1 + 2j,
                                   "d": np.bool_(True)})
        assert converted == {"a": 1.5, "b": [1, 2], "c": {"re": 1.0, "im": 2.0}, "d": True}

    def test_check_below(self):
        qc = QCResult("norm").set_validity(True)
        assert qc.check_below("error", 1e-9, 1e-6)
        assert qc.is_valid
        assert not qc.check_below("other", float("nan"), 1e-6)
        assert not qc.is_valid
        assert qc.to_dict()["tolerances"] == {"error": 1e-6, "other": 1e-6}

    def test_run_report(self):
        report = RunReport("quick", parameters={"rng_seed": 42})
        assert report.passed
        report.add(QCResult("a").set_validity(True), 0.5)
        report.add(QCResult("b"), 1.0)
        body = report.body()
        assert body["status"] == "fail"
        assert body["failed"] == ["b"]
        assert "timings" not in body
        assert report.header()["wall_time"] == pytest.approx(1.5)
