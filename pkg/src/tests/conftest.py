# src/tests/conftest.py
import numpy as np
import pytest

from app import create_app
from src.models.packet import SpaceTimePoint


def sample_points(n, seed=1234, scale=2.0, with_time=True):
    rng = np.random.default_rng(seed)
    space = rng.uniform(-scale, scale, size=(n, 3))
    times = rng.uniform(-1.0, 1.0, size=n) if with_time else np.zeros(n)
    return [SpaceTimePoint(float(x), float(y), float(z), float(t)) for (x, y, z), t in zip(space, times)]


@pytest.fixture
def points():
    return sample_points(8)


@pytest.fixture
def app():
    app = create_app('testing')
    yield app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()
