import itertools

import networkx as nx
import pytest

from levgraph.graph import LevGraph


def to_networkx(g: LevGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges().tolist())
    return G


def strings_up_to(k, a):
    return [w for n in range(k + 1) for w in itertools.product(range(a), repeat=n)]


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome.upper()
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "FAILED"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]:8s} {name}")


@pytest.fixture
def nx_graph():
    return to_networkx
