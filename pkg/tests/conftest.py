import numpy as np
import pytest

from hardy_adjoint.verification import CATALOG


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(params=CATALOG, ids=lambda t: t.name)
def test_map(request):
    return request.param


def disk_points(rng, n, radius=1.0):
    return radius * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
