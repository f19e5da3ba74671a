import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_ac"):
        return
    crit = name.split("_")[1]
    if report.when == "call" or report.outcome in ("failed", "skipped"):
        state = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        prev = _acceptance.get(crit)
        if prev is None or prev == "PASS" or state == "FAIL":
            _acceptance[crit] = state if prev != "FAIL" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=lambda c: int(c[2:])):
        terminalreporter.write_line("criterion %-3s %s" % (crit[2:], _acceptance[crit]))
