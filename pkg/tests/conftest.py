import random

import pytest

from binedge.families import FanSpec, make_F, make_k_fan
from binedge.graph import Graph, complete_graph, cycle_graph, path_graph
from binedge.scan import enumerate_connected_graphs


def small_connected(n_max=5):
    return [G for n in range(1, n_max + 1) for G in enumerate_connected_graphs(n)]


def corpus():
    """Graphs the algebra property suites run over: every connected graph on
    at most 5 vertices plus a few family members and disconnected cases."""
    extra = [
        make_F(3),
        make_k_fan(FanSpec.pure_spec(3, [[1, 2]])),
        make_k_fan(FanSpec.pure_spec(3, [[1], [2]])),
        cycle_graph(6),
        Graph(5, [(1, 2), (3, 4)]),
        Graph(3),
    ]
    return small_connected(5) + extra


def random_relabel(G, rng):
    perm = list(G.vertices)
    rng.shuffle(perm)
    mp = dict(zip(G.vertices, perm))
    return Graph(G.n, [(mp[u], mp[v]) for u, v in G.edges])


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def P4():
    return path_graph(4)


@pytest.fixture(scope="session")
def K4():
    return complete_graph(4)


def pytest_addoption(parser):
    parser.addoption("--scan-n6", action="store_true", default=False,
                     help="extend the bound scan of the acceptance gate to n = 6")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
