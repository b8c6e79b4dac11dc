import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from multlie import kernels

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=[b.NAME for b in kernels.backends()])
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    chosen = next(b for b in kernels.backends() if b.NAME == request.param)
    monkeypatch.setattr(kernels, "backend", chosen)
    return chosen


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
