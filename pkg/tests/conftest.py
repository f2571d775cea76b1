"""Shared test setup and the per-criterion acceptance summary.

Acceptance tests carry ``@pytest.mark.criterion(number, title)``; a
criterion passes when every test tagged with it passes. Tests may attach a
``measured`` user property that is echoed on the summary line.
"""
import sys
from collections import OrderedDict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = OrderedDict()  # number -> {"title", "failed", "ran", "notes"}
_ITEM_CRITERION = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion tag")


def pytest_collection_modifyitems(session, config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is None:
            continue
        number, title = mark.args
        _ITEM_CRITERION[item.nodeid] = number
        _CRITERIA.setdefault(number, {"title": title, "failed": [], "ran": 0, "notes": []})


def pytest_runtest_logreport(report):
    number = _ITEM_CRITERION.get(report.nodeid)
    if number is None:
        return
    entry = _CRITERIA[number]
    if report.when == "call":
        entry["ran"] += 1
        entry["notes"] += [v for k, v in report.user_properties if k == "measured"]
    if report.failed:
        entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        if e["ran"] == 0 and not e["failed"]:
            status = "SKIP"
        else:
            status = "FAIL" if e["failed"] else "PASS"
        line = f"{status} criterion {number:>2}: {e['title']}"
        if e["notes"]:
            line += " | " + "; ".join(e["notes"])
        if e["failed"]:
            line += " | failing: " + ", ".join(e["failed"])
        tr.write_line(line)
