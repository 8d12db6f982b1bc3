"""Brute-force ground truth for small networks.

Everything here enumerates: simple paths by DFS, state vectors by BAT order.
Full scans of all ``2**m`` vectors use a numpy connectivity table that
propagates source reachability for a whole block of masks at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from lexpath.bat import CapExceededError, ENUM_CAP, bat_enumerate, check_cap
from lexpath.binweight import LexWeight
from lexpath.graph import Network, StateVector, connected_mask, is_st_connected
from lexpath.pathfind import PathResult, earliest_path, latest_path

CHUNK = 1 << 18

MIN_EARLIEST = "min-earliest-weight"
MIN_LATEST = "min-latest-weight"
MAX_VALUE = "max-vector-value"
OBJECTIVES = (MIN_EARLIEST, MIN_LATEST, MAX_VALUE)


class NoPathError(ValueError):
    """The network has no source-sink path at all."""


@dataclass(frozen=True)
class SimplePath:
    nodes: tuple[int, ...]
    arc_ids: tuple[int, ...]
    earliest_weight: LexWeight
    latest_weight: LexWeight

    @property
    def mask(self) -> int:
        return self.earliest_weight.value


def enumerate_simple_paths(net: Network, force: bool = False) -> list[SimplePath]:
    """Every simple source-sink path, found by DFS with visited-node pruning."""
    check_cap(net.m, force)
    m = net.m
    adj = net.adjacency
    sink = net.sink
    out: list[SimplePath] = []
    nodes = [net.source]
    arcs: list[int] = []
    on_path = {net.source}

    def extend(u: int) -> None:
        for v, k in adj[u]:
            if v in on_path:
                continue
            nodes.append(v)
            arcs.append(k)
            if v == sink:
                out.append(
                    SimplePath(
                        tuple(nodes),
                        tuple(arcs),
                        LexWeight(sum(1 << (i - 1) for i in arcs)),
                        LexWeight(sum(1 << (m - i) for i in arcs)),
                    )
                )
            else:
                on_path.add(v)
                extend(v)
                on_path.discard(v)
            nodes.pop()
            arcs.pop()

    extend(net.source)
    return out


def oracle_extreme_path(
    net: Network, objective: str, force: bool = False
) -> PathResult | None:
    """Optimum over all enumerated simple paths.

    ``max-vector-value`` reports the earliest-scheme weight (the vector value)
    of the winning path.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}")
    paths = enumerate_simple_paths(net, force)
    if not paths:
        return None
    if objective == MIN_EARLIEST:
        best = min(paths, key=lambda p: p.earliest_weight.value)
        weight = best.earliest_weight
    elif objective == MIN_LATEST:
        best = min(paths, key=lambda p: p.latest_weight.value)
        weight = best.latest_weight
    else:
        best = max(paths, key=lambda p: p.earliest_weight.value)
        weight = best.earliest_weight
    return PathResult(
        nodes=best.nodes,
        arc_ids=best.arc_ids,
        vector=StateVector.from_arcs(best.arc_ids, net.m),
        weight=weight,
    )


def oracle_first_connected(net: Network, force: bool = False) -> StateVector | None:
    """First vector in BAT order whose working arcs join source and sink."""
    if net.m == 0:
        return None
    for x in bat_enumerate(net.m, force):
        if is_st_connected(net, x):
            return x
    return None


def _compact(net: Network) -> tuple[list[tuple[int, int, int]], int, int]:
    index: dict[int, int] = {}
    for node in (net.source, net.sink):
        index.setdefault(node, len(index))
    arcs = []
    for arc in net.arcs:
        iu = index.setdefault(arc.u, len(index))
        iv = index.setdefault(arc.v, len(index))
        arcs.append((arc.id - 1, iu, iv))
    if len(index) > 64:
        raise CapExceededError(
            f"connectivity table supports at most 64 arc-bearing nodes, got {len(index)}"
        )
    return arcs, index[net.source], index[net.sink]


def connectivity_table(
    net: Network, lo: int = 0, hi: int | None = None, force: bool = False
) -> np.ndarray:
    """Boolean array: entry ``j`` says whether mask ``lo + j`` connects s and t."""
    check_cap(net.m, force)
    total = 1 << net.m
    hi = total if hi is None else hi
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"mask range [{lo}, {hi}) outside [0, {total})")
    arcs, s, t = _compact(net)
    out = np.empty(hi - lo, dtype=bool)
    one = np.uint64(1)
    for start in range(lo, hi, CHUNK):
        stop = min(start + CHUNK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        active = [((masks >> bit) & 1).astype(bool) for bit, _, _ in arcs]
        reach = np.full(stop - start, one << np.uint64(s), dtype=np.uint64)
        while True:
            before = reach.copy()
            for on, (_, iu, iv) in zip(active, arcs):
                bu, bv = one << np.uint64(iu), one << np.uint64(iv)
                touch = on & (((reach & bu) != 0) | ((reach & bv) != 0))
                reach[touch] |= bu | bv
            if np.array_equal(before, reach):
                break
        out[start - lo : stop - lo] = (reach & (one << np.uint64(t))) != 0
    return out


def oracle_last_disconnected(net: Network, force: bool = False) -> StateVector | None:
    """BAT-maximal disconnected vector, from a scan of every vector."""
    table = connectivity_table(net, force=force)
    gaps = np.flatnonzero(~table)
    if gaps.size == 0:
        return None
    return StateVector.from_mask(int(gaps[-1]), net.m)


def last_disconnected_greedy(net: Network) -> StateVector:
    """BAT-maximal disconnected vector in ``m`` connectivity probes.

    Disconnection is closed under removing arcs, so each arc from ``m`` down
    is kept on whenever the graph stays disconnected with every lower arc off.
    """
    mask = 0
    for j in range(net.m - 1, -1, -1):
        trial = mask | (1 << j)
        if not connected_mask(net, trial):
            mask = trial
    return StateVector.from_mask(mask, net.m)


REGIONS = ("before", "between", "after")


@dataclass
class RegionReport:
    earliest_vector: StateVector
    earliest_value: LexWeight
    latest_vector: StateVector
    latest_value: LexWeight
    last_disconnected_vector: StateVector | None
    last_disconnected_value: LexWeight | None
    max_value_path_vector: StateVector
    max_value_path_value: LexWeight
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        def vec(x):
            return None if x is None else str(x)

        def w(x):
            return None if x is None else x.decimal()

        return {
            "earliest_vector": vec(self.earliest_vector),
            "earliest_value": w(self.earliest_value),
            "latest_vector": vec(self.latest_vector),
            "latest_value": w(self.latest_value),
            "last_disconnected_vector": vec(self.last_disconnected_vector),
            "last_disconnected_value": w(self.last_disconnected_value),
            "max_value_path_vector": vec(self.max_value_path_vector),
            "max_value_path_value": w(self.max_value_path_value),
            "counts": {r: dict(self.counts[r]) for r in REGIONS},
            "violations": dict(self.violations),
        }


def region_census(net: Network, force: bool = False) -> RegionReport:
    """Split all vectors at the earliest and latest path vectors and count.

    Regions are ``before`` (value < earliest), ``between`` (earliest..latest
    inclusive) and ``after``.  The two claims made about the ``after`` region
    are measured as violation counts, never asserted.
    """
    check_cap(net.m, force)
    early = earliest_path(net)
    late = latest_path(net)
    if early is None or late is None:
        raise NoPathError("no source-sink path")
    paths = enumerate_simple_paths(net, force)
    top = max(paths, key=lambda p: p.mask)

    total = 1 << net.m
    table = connectivity_table(net, force=force)
    is_path = np.zeros(total, dtype=bool)
    is_path[[p.mask for p in paths]] = True

    e, l = early.vector.mask, late.vector.mask
    bounds = {"before": (0, e), "between": (e, l + 1), "after": (l + 1, total)}
    counts = {}
    for region, (a, b) in bounds.items():
        conn = int(np.count_nonzero(table[a:b]))
        counts[region] = {
            "total": b - a,
            "connected": conn,
            "disconnected": (b - a) - conn,
            "simple_path": int(np.count_nonzero(is_path[a:b])),
        }
    last_dis = oracle_last_disconnected(net, force)
    return RegionReport(
        earliest_vector=early.vector,
        earliest_value=LexWeight(e),
        latest_vector=late.vector,
        latest_value=LexWeight(l),
        last_disconnected_vector=last_dis,
        last_disconnected_value=None if last_dis is None else LexWeight(last_dis.mask),
        max_value_path_vector=StateVector.from_mask(top.mask, net.m),
        max_value_path_value=LexWeight(top.mask),
        counts=counts,
        violations={
            "disconnected_after_latest": counts["after"]["disconnected"],
            "simple_path_after_latest": counts["after"]["simple_path"],
        },
    )


@dataclass(frozen=True)
class ReliabilityResult:
    probability: float
    vectors_evaluated: int
    vectors_pruned: int

    def to_dict(self) -> dict:
        return {
            "probability": f"{self.probability:.12f}",
            "vectors_evaluated": self.vectors_evaluated,
            "vectors_pruned": self.vectors_pruned,
        }


def reliability_exact(
    net: Network,
    probs=None,
    prune: bool = False,
    force: bool = False,
) -> ReliabilityResult:
    """Two-terminal reliability by summing the mass of every connected vector.

    With ``prune`` every vector ahead of the earliest path vector is skipped;
    all of them are disconnected so the sum is unchanged.
    """
    probs = net.probabilities if probs is None else tuple(float(p) for p in probs)
    if len(probs) != net.m:
        raise ValueError(f"need {net.m} probabilities, got {len(probs)}")
    for i, p in enumerate(probs, start=1):
        if not (0.0 <= p <= 1.0) or math.isnan(p):
            raise ValueError(f"arc {i}: probability {p} outside [0, 1]")
    check_cap(net.m, force)

    total = 1 << net.m
    lo = 0
    if prune:
        early = earliest_path(net)
        lo = total if early is None else early.vector.mask

    probability = 0.0
    p = np.asarray(probs, dtype=np.float64)
    for start in range(lo, total, CHUNK):
        stop = min(start + CHUNK, total)
        conn = connectivity_table(net, start, stop, force=True)
        masks = np.arange(start, stop, dtype=np.int64)[conn]
        mass = np.ones(masks.size, dtype=np.float64)
        for i in range(net.m):
            on = ((masks >> i) & 1).astype(bool)
            mass *= np.where(on, p[i], 1.0 - p[i])
        probability += float(mass.sum())
    return ReliabilityResult(
        probability=min(1.0, max(0.0, probability)),
        vectors_evaluated=total - lo,
        vectors_pruned=lo,
    )


__all__ = [
    "CapExceededError",
    "ENUM_CAP",
    "MAX_VALUE",
    "MIN_EARLIEST",
    "MIN_LATEST",
    "NoPathError",
    "RegionReport",
    "ReliabilityResult",
    "SimplePath",
    "connectivity_table",
    "enumerate_simple_paths",
    "last_disconnected_greedy",
    "oracle_extreme_path",
    "oracle_first_connected",
    "oracle_last_disconnected",
    "region_census",
    "reliability_exact",
]
