import time

import pytest

from cltgroups import builtins
from cltgroups.permgroup import cyclic_group

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _criteria.append((marker.args[0], item.name, rep.outcome, rep.duration))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, outcome, duration in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {name}  ({duration:.2f}s)")


@pytest.fixture(scope="session")
def A4():
    return builtins.resolve("A4")


@pytest.fixture(scope="session")
def SL23():
    return builtins.resolve("SL23")


@pytest.fixture(scope="session")
def S4():
    return builtins.resolve("S4")


@pytest.fixture(scope="session")
def C6():
    return cyclic_group(6)


@pytest.fixture
def timer():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
