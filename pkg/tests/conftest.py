import numpy as np
import pytest
from hypothesis import settings

from fuzzylens import default_config

settings.register_profile("fuzzylens", deadline=None, max_examples=100)
settings.load_profile("fuzzylens")


@pytest.fixture(scope="session")
def default_engine():
    return default_config().build_engine()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    ACCEPTANCE[crit] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE, key=lambda c: int(c.split(".")[0])):
        status, secs = ACCEPTANCE[crit]
        terminalreporter.write_line(f"[{status}] criterion {crit} ({secs:.2f}s)")
