"""Dijkstra over power-of-two arc weights.

Distances are plain Python ints inside the search loop (unreached nodes are
simply absent from ``dist``) and wrapped as ``LexWeight`` on the way out.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from lexpath.binweight import EARLIEST, LATEST, LexWeight, WeightScheme
from lexpath.graph import Network, StateVector


@dataclass(frozen=True)
class PathResult:
    nodes: tuple[int, ...]
    arc_ids: tuple[int, ...]
    vector: StateVector
    weight: LexWeight

    @property
    def arc_set(self) -> frozenset[int]:
        return frozenset(self.arc_ids)

    def describe(self) -> str:
        arcs = ",".join(map(str, sorted(self.arc_ids)))
        return (
            f"path {'-'.join(map(str, self.nodes))}, arcs {{{arcs}}}, "
            f"weight {self.weight.decimal()}, vector {self.vector}"
        )


def binary_dijkstra(
    net: Network, scheme: WeightScheme, check_ties: bool = False
) -> PathResult | None:
    """Minimum-weight source-sink path under ``scheme``; ``None`` if unreachable.

    The main loop stops as soon as the sink is settled.  With ``check_ties``
    an ``AssertionError`` is raised if two settled nodes share a distance,
    which power-of-two weights rule out.
    """
    if scheme.m != net.m:
        raise ValueError(f"scheme built for m={scheme.m}, network has m={net.m}")
    if scheme.kind == EARLIEST:
        shifts = [0] + [i - 1 for i in range(1, net.m + 1)]
    else:
        shifts = [0] + [net.m - i for i in range(1, net.m + 1)]

    adj = net.adjacency
    source, sink = net.source, net.sink
    dist = {source: 0}
    prev: dict[int, tuple[int, int]] = {}
    settled = set()
    settled_dists = set()
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in settled:
            continue
        settled.add(u)
        if check_ties:
            assert d not in settled_dists, f"distance tie at node {u}: {d}"
            settled_dists.add(d)
        if u == sink:
            break
        for v, k in adj[u]:
            if v in settled:
                continue
            alt = d + (1 << shifts[k])
            old = dist.get(v)
            if old is None or alt < old:
                dist[v] = alt
                prev[v] = (u, k)
                heapq.heappush(heap, (alt, v))

    if sink not in settled:
        return None
    nodes = [sink]
    arc_ids = []
    current = sink
    while current != source:
        current, k = prev[current]
        nodes.append(current)
        arc_ids.append(k)
    nodes.reverse()
    arc_ids.reverse()
    return PathResult(
        nodes=tuple(nodes),
        arc_ids=tuple(arc_ids),
        vector=StateVector.from_arcs(arc_ids, net.m),
        weight=LexWeight(dist[sink]),
    )


def earliest_path(net: Network, check_ties: bool = False) -> PathResult | None:
    if net.m == 0:
        return None
    return binary_dijkstra(net, WeightScheme(EARLIEST, net.m), check_ties)


def latest_path(net: Network, check_ties: bool = False) -> PathResult | None:
    if net.m == 0:
        return None
    return binary_dijkstra(net, WeightScheme(LATEST, net.m), check_ties)
