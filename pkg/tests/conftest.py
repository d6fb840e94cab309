import math

import pytest


def rel_err(actual, expected):
    expected = float(expected)
    if expected == 0:
        return abs(actual)
    return abs(actual - expected) / abs(expected)


@pytest.fixture
def rel():
    return rel_err


BASES = [0.5, 1.0001, 2.0, math.e, 4.0, 10.0]


# acceptance criteria report: id -> (description, passed)
ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        ACCEPTANCE[marker.args[0]] = (marker.args[1], report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, description): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[cid]
        terminalreporter.write_line(f"AC{cid:<3}{'PASS' if ok else 'FAIL'}  {desc}")
