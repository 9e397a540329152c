"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_RESULTS: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, {"title": title, "failed": False, "seconds": None})
    entry["failed"] |= rep.failed
    for key, value in item.user_properties:
        if key == "seconds":
            entry["seconds"] = max(value, entry["seconds"] or 0.0)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_RESULTS):
        entry = _RESULTS[number]
        status = "FAIL" if entry["failed"] else "PASS"
        took = "" if entry["seconds"] is None else f" ({entry['seconds']:.2f} s)"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {entry['title']}{took}")
