import numpy as np
import pytest

from cliffalg.algebra import Signature


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240811)


def pytest_report_header(config):
    from cliffalg.backend import BACKEND

    return f"cliffalg kernel backend: {BACKEND}"
