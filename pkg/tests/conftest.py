"""Emit one [PASS]/[FAIL] line per acceptance criterion after the run.

Per-test prints are swallowed by pytest's fd-level capture, so the verdict
lines go through the terminal reporter, which writes to the real stdout.
"""

import re

_PAT = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_outcomes = {}


def pytest_runtest_logreport(report):
    m = _PAT.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "setup" and report.outcome in ("failed", "skipped"):
        _outcomes[num] = report.outcome
    elif report.when == "call":
        _outcomes[num] = report.outcome
    elif report.when == "teardown" and report.outcome == "failed":
        _outcomes[num] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    verdicts = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        verdict = verdicts.get(_outcomes[num], "FAIL")
        terminalreporter.write_line(f"[{verdict}] {num:02d} {CRITERIA[num]}")
