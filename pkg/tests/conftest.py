from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "distcat", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("distcat")

FIXTURES = Path(__file__).parent / "fixtures"

# filled in by test_acceptance; printed once at the end of the session
ACCEPTANCE_LINES: dict = {}


@pytest.fixture
def fixtures():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
