"""Shared pytest configuration.

Tests marked ``criterion(n, description)`` feed a per-criterion PASS/FAIL
summary printed after the run, one line per criterion.
"""

from collections import defaultdict

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n, description): acceptance-criterion membership"
    )


_OUTCOMES: dict[int, dict] = defaultdict(lambda: {"desc": "", "failed": 0, "passed": 0, "xfailed": 0})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, desc = marker.args
    entry = _OUTCOMES[n]
    entry["desc"] = desc
    if hasattr(report, "wasxfail"):
        entry["xfailed"] += 1
    elif report.failed:
        entry["failed"] += 1
    elif report.passed:
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        entry = _OUTCOMES[n]
        status = "FAIL" if entry["failed"] else "PASS"
        note = f" ({entry['xfailed']} documented deviation)" if entry["xfailed"] else ""
        terminalreporter.write_line(f"criterion {n}: {status}{note} - {entry['desc']}")
