"""Collects acceptance outcomes and prints one line per criterion at the end."""
import pytest

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, summary): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, summary = marker.args
    failed = report.failed or (report.when == "setup" and not report.passed)
    prev = _OUTCOMES.get(number, (summary, True))
    if report.when == "call" or failed:
        _OUTCOMES[number] = (summary, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        summary, ok = _OUTCOMES[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {summary}")
