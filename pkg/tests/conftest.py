import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from angulata import ClusterTilting, ModelParams

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def pentagon():
    return ClusterTilting.from_lists(ModelParams(1, 2), [(0, 2), (0, 3)])


@pytest.fixture
def fan():
    """Fan triangulation of the hexagon at vertex 0."""
    return ClusterTilting.from_lists(ModelParams(1, 3), [(0, 2), (0, 3), (0, 4)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
