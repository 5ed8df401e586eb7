# src/models/qc_result.py
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np


def convert_numpy(obj):
    """Convert numpy scalars/arrays (and containers of them) to Python natives."""
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, (np.ndarray, list, tuple)):
        return [convert_numpy(i) for i in obj]
    if isinstance(obj, dict):
        return {k: convert_numpy(v) for k, v in obj.items()}
    return obj


class QCResult:
    """Outcome of one verification check"""

    def __init__(self, test_name):
        self.test_name = test_name
        self.is_valid = False
        self.measurements = {}
        self.theoretical_values = {}
        self.errors = {}
        self.tolerances = {}
        self.details = {}

    def set_validity(self, is_valid):
        self.is_valid = bool(is_valid)
        return self

    def add_measurement(self, name, value):
        self.measurements[name] = value
        return self

    def add_theoretical(self, name, value):
        """Expected value the measurement is compared with"""
        self.theoretical_values[name] = value
        return self

    def add_error(self, name, value):
        self.errors[name] = value
        return self

    def add_tolerance(self, name, value):
        self.tolerances[name] = value
        return self

    def add_detail(self, name, value):
        self.details[name] = value
        return self

    def check_below(self, name, value, tolerance):
        """Record `value` as an error term and fail the check if it exceeds `tolerance`."""
        self.add_error(name, value).add_tolerance(name, tolerance)
        passed = bool(np.isfinite(value) and value <= tolerance)
        if not passed:
            self.is_valid = False
        return passed

    def to_dict(self):
        return {
            'test_name': self.test_name,
            'is_valid': bool(self.is_valid),
            'measurements': convert_numpy(self.measurements),
            'theoretical_values': convert_numpy(self.theoretical_values),
            'errors': convert_numpy(self.errors),
            'tolerances': convert_numpy(self.tolerances),
            'details': convert_numpy(self.details)
        }


@dataclass
class RunReport:
    """Checks of one suite run; wall times stay out of the body."""
    suite: str
    checks: List[QCResult] = field(default_factory=list)
    parameters: Dict = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.is_valid for check in self.checks)

    @property
    def failed_checks(self) -> List[str]:
        return [check.test_name for check in self.checks if not check.is_valid]

    def add(self, check: QCResult, seconds: float = 0.0):
        self.checks.append(check)
        self.timings[check.test_name] = float(seconds)
        return self

    def body(self):
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "failed": self.failed_checks,
            "parameters": convert_numpy(self.parameters),
            "checks": [check.to_dict() for check in self.checks],
        }

    def header(self):
        return {"wall_time": float(sum(self.timings.values())),
                "timings": {k: float(v) for k, v in self.timings.items()}}
