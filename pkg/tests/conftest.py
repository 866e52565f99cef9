"""Collects the outcome of each acceptance criterion and prints a summary."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results = {}
_titles = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.match(item.name)
        if m:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _titles[int(m.group(1))] = doc[0] if doc else item.name


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.failed:
        if _results.get(k) != "FAIL":
            _results[k] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        terminalreporter.write_line(f"criterion {k:2d}: {_results[k]}  {_titles.get(k, '')}")
