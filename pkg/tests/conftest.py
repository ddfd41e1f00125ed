from __future__ import annotations

from collections import defaultdict

import pytest

CRITERIA = {
    1: "double-SHA-256 ledger exactness",
    2: "RIPEMD-160 / P2PKH ledger exactness",
    3: "difficulty-1 footprint",
    4: "P2PKH footprint",
    5: "scenario scaling",
    6: "failure-budget sensitivity",
    7: "energy anchors",
    8: "energy ladder",
    9: "oracle equivalence",
    10: "sweep determinism",
}

_outcomes: dict[int, list[tuple[str, str]]] = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    n = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[n].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            terminalreporter.write_line(f"criterion {n:2d} NOT RUN  {title}")
            continue
        failed = [name for name, o in results if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        detail = f" ({len(results) - len(failed)}/{len(results)} checks; failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n:2d} {status}  {title}{detail}")
