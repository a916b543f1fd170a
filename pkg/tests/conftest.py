"""Shared pytest configuration.

Prints one pass/fail line per acceptance criterion in the terminal summary,
derived from the outcomes of the tests in test_acceptance.py.
"""

import re

_ACCEPTANCE = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _PATTERN.search(report.nodeid)
    if m:
        num = int(m.group(1))
        label = m.group(2).replace("_", " ")
        _ACCEPTANCE[num] = (label, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        label, outcome = _ACCEPTANCE[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num} ({label}): {verdict}")
