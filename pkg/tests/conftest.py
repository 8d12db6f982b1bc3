import itertools
import random

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from lexpath.corpus import benchmark, diamond, random_connected, single_edge, two_component
from lexpath.graph import Network

settings.register_profile("ci", max_examples=60, deadline=None)
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def bench():
    return benchmark()


@pytest.fixture
def dia():
    return diamond()


@pytest.fixture
def edge():
    return single_edge()


@pytest.fixture
def split():
    return two_component()


def to_nx(net: Network, mask: int | None = None) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1, net.n + 1))
    for arc in net.arcs:
        if mask is None or (mask >> (arc.id - 1)) & 1:
            g.add_edge(arc.u, arc.v, id=arc.id)
    return g


def nx_connected(net: Network, mask: int) -> bool:
    return nx.has_path(to_nx(net, mask), net.source, net.sink)


def nx_path_arc_sets(net: Network) -> list[frozenset[int]]:
    g = to_nx(net)
    out = []
    for nodes in nx.all_simple_paths(g, net.source, net.sink):
        out.append(frozenset(g.edges[a, b]["id"] for a, b in zip(nodes, nodes[1:])))
    return out


@st.composite
def connected_networks(draw, max_n=7, max_m=12):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n - 1, min(max_m, n * (n - 1) // 2)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected(random.Random(seed), n, m)


@st.composite
def any_networks(draw, max_n=6):
    """Arbitrary simple graphs, possibly with source and sink disconnected."""
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10))
    chosen = draw(st.permutations(chosen))
    return Network.from_edges(n, chosen, 1, n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
