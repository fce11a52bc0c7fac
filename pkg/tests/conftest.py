import random

import pytest

from domlab.graph import Graph

_results: dict[int, tuple[str, str]] = {}
_notes: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        num, title = crit
        _results[num] = ("PASS" if report.passed else "FAIL", title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        status, title = _results[num]
        line = f"criterion {num}: {status}  {title}"
        if num in _notes:
            line += f"  [{_notes[num]}]"
        terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def note(request):
    """Attach a short result summary to the test's acceptance line."""
    marker = request.node.get_closest_marker("criterion")

    def write(text: str) -> None:
        _notes[marker.args[0]] = text
        print(f"criterion {marker.args[0]}: {text}")
    return write
