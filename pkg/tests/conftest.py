import time

import pytest

_RESULTS = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    status = "PASS" if call.excinfo is None else "FAIL"
    _RESULTS.append((number, status, text, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text, dt in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {number}: {status} ({dt:.2f} s) {text}")


@pytest.fixture
def timer():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
