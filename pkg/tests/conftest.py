"""Per-criterion summary for the acceptance module.

Tests marked ``@pytest.mark.criterion(n, budget=seconds)`` are grouped by
``n``; after the run one PASS/FAIL line is printed per criterion.  A
criterion fails if any of its tests fails or their combined call time
exceeds the budget.
"""
import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results = defaultdict(lambda: {"outcomes": [], "seconds": 0.0, "budget": None, "failed": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, budget): acceptance criterion and its time budget")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    entry = _results[marker.args[0]]
    entry["budget"] = marker.kwargs.get("budget")
    entry["seconds"] += call.duration
    ok = call.excinfo is None
    entry["outcomes"].append(ok)
    if not ok:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        budget = entry["budget"]
        in_time = budget is None or entry["seconds"] <= budget
        passed = all(entry["outcomes"]) and in_time
        line = (f"criterion {number}: {'PASS' if passed else 'FAIL'} "
                f"({sum(entry['outcomes'])}/{len(entry['outcomes'])} tests, "
                f"{entry['seconds']:.2f}s of {budget}s budget)")
        if entry["failed"]:
            line += " failing: " + ", ".join(entry["failed"])
        if not in_time:
            line += " over budget"
        terminalreporter.write_line(line)
