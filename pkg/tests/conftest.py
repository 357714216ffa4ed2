import random

import pytest

from covering_cycles import catalog

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker
    if report.failed or (report.when == "call" and number not in _criteria):
        _criteria[number] = (title, "FAIL" if report.failed else "PASS")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"{status}  criterion {number}: {title}")


@pytest.fixture(scope="session")
def undirected_catalog():
    return catalog.small_undirected()


@pytest.fixture(scope="session")
def directed_catalog():
    return catalog.small_directed()


def random_graphs(count, max_edges, seed, **kw):
    rng = random.Random(seed)
    return [catalog.random_multigraph(rng, max_edges, **kw) for _ in range(count)]
