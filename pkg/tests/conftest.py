"""Shared fixtures and the acceptance summary printed after the run."""

import pytest

_results = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker:
            item.user_properties.append(("acceptance", marker.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "acceptance" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = props["acceptance"]
        ok = report.outcome == "passed"
        prev = _results.get(number, (title, True))
        _results[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, ok = _results[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def L():
    from lrrule.textio import parse_tableau
    return parse_tableau("4:0,0|2:0,1,1|1:0,1,2,2|0:0,1,3|0:2,4")


@pytest.fixture
def T():
    from lrrule.textio import parse_tableau
    return parse_tableau("3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5")
