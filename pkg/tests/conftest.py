"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line each at the end."""

import pytest

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion with a runtime limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title, limit = mark.args
    _RESULTS[number] = (title, rep.passed, rep.duration, limit)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, secs, limit = _RESULTS[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}  ({secs:.2f} s, limit {limit} s)")
