"""Named fixture networks and seeded random connected graphs."""

from __future__ import annotations

import random

from lexpath.graph import Network

BENCHMARK_EDGES = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6), (5, 6)]


def benchmark() -> Network:
    """Six-node, eight-arc benchmark network; source 1, sink 6."""
    return Network.from_edges(6, BENCHMARK_EDGES, 1, 6)


def diamond() -> Network:
    return Network.from_edges(4, [(1, 2), (1, 3), (2, 4), (3, 4)], 1, 4)


def single_edge() -> Network:
    return Network.from_edges(2, [(1, 2)], 1, 2)


def two_component() -> Network:
    """Source side {1, 2} and sink side {3, 4} with no arc between them."""
    return Network.from_edges(4, [(1, 2), (3, 4)], 1, 4)


FIXTURES = {
    "benchmark": benchmark,
    "diamond": diamond,
    "single_edge": single_edge,
}


def random_connected(
    rng: random.Random,
    n: int,
    m: int,
    source: int = 1,
    sink: int | None = None,
    shuffle_arcs: bool = True,
) -> Network:
    """Random spanning tree on ``n`` nodes plus ``m - n + 1`` distinct extra arcs."""
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"m={m} must lie in [{n - 1}, {max_m}] for n={n}")
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = []
    present = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.append((u, v))
        present.add((min(u, v), max(u, v)))
    if m - len(edges) > max_m // 2:
        pool = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if (u, v) not in present
        ]
        edges.extend(rng.sample(pool, m - len(edges)))
    else:
        while len(edges) < m:
            u, v = rng.randrange(1, n + 1), rng.randrange(1, n + 1)
            key = (min(u, v), max(u, v))
            if u == v or key in present:
                continue
            present.add(key)
            edges.append(key)
    if shuffle_arcs:
        rng.shuffle(edges)
    return Network.from_edges(n, edges, source, n if sink is None else sink)


def random_corpus(seed: int, cases: int, max_n: int = 8, max_m: int = 14) -> list[Network]:
    """``cases`` connected instances with n in [3, max_n], m in [n-1, max_m]."""
    rng = random.Random(seed)
    nets = []
    for _ in range(cases):
        n = rng.randint(3, max_n)
        m = rng.randint(n - 1, min(max_m, n * (n - 1) // 2))
        nets.append(random_connected(rng, n, m))
    return nets
