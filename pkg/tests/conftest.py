"""Shared fixtures and the acceptance report hook."""

import pytest

from soltes import classify_vertices, cycle

# -- fixtures ------------------------------------------------------------------


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timing assertions measure work."""
    classify_vertices(cycle(5), verify=True)
    classify_vertices(cycle(80), workers=2)


# -- acceptance report ---------------------------------------------------------

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _RESULTS.get(key, "PASS")
        _RESULTS[key] = "PASS" if prev == "PASS" and rep.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), verdict in sorted(_RESULTS.items(), key=lambda kv: str(kv[0][0]).zfill(4)):
        terminalreporter.write_line(f"criterion {number:>3}  {verdict}  {title}")
