import itertools

import numpy as np
import pytest
from hypothesis import given

from lexpath.bat import CapExceededError, find_xfc_correct
from lexpath.binweight import LexWeight
from lexpath.corpus import random_connected
from lexpath.graph import Network, StateVector, connected_mask
from lexpath.oracle import (
    MAX_VALUE,
    MIN_EARLIEST,
    MIN_LATEST,
    NoPathError,
    connectivity_table,
    enumerate_simple_paths,
    last_disconnected_greedy,
    oracle_extreme_path,
    oracle_first_connected,
    oracle_last_disconnected,
    region_census,
    reliability_exact,
)
from lexpath.pathfind import earliest_path

from conftest import any_networks, connected_networks, nx_connected, nx_path_arc_sets

BENCH_PATHS = {
    (1, 2, 4, 6), (1, 2, 5, 6), (1, 2, 4, 5, 6), (1, 2, 5, 4, 6),
    (1, 3, 5, 6), (1, 3, 5, 4, 6), (1, 3, 5, 2, 4, 6),
}


def test_simple_paths_benchmark(bench):
    paths = enumerate_simple_paths(bench)
    assert {p.nodes for p in paths} == BENCH_PATHS
    assert {frozenset(p.arc_ids) for p in paths} == set(nx_path_arc_sets(bench))


def test_simple_paths_small(dia, edge, split):
    assert len(enumerate_simple_paths(dia)) == 2
    assert len(enumerate_simple_paths(edge)) == 1
    assert enumerate_simple_paths(split) == []


@given(any_networks())
def test_simple_paths_match_networkx(net):
    ours = [frozenset(p.arc_ids) for p in enumerate_simple_paths(net)]
    assert len(ours) == len(set(ours))
    assert set(ours) == set(nx_path_arc_sets(net))
    for p in enumerate_simple_paths(net):
        assert p.earliest_weight.value == StateVector.from_arcs(p.arc_ids, net.m).mask


def test_extreme_paths_benchmark(bench):
    lo = oracle_extreme_path(bench, MIN_EARLIEST)
    assert lo.weight == LexWeight(69) and lo.arc_set == {1, 3, 7}
    hi = oracle_extreme_path(bench, MIN_LATEST)
    assert hi.weight == LexWeight(73) and hi.arc_set == {2, 5, 8}
    top = oracle_extreme_path(bench, MAX_VALUE)
    assert top.arc_set == {1, 3, 6, 8} and top.weight == LexWeight(165)
    assert top.nodes == (1, 2, 4, 5, 6)
    assert oracle_extreme_path(Network.from_edges(4, [(1, 2), (3, 4)], 1, 4), MAX_VALUE) is None
    with pytest.raises(ValueError):
        oracle_extreme_path(bench, "shortest")


def test_first_connected(bench, dia, edge, split):
    assert str(oracle_first_connected(bench)) == "10100010"
    assert str(oracle_first_connected(dia)) == "1010"
    assert str(oracle_first_connected(edge)) == "1"
    assert oracle_first_connected(split) is None


def _nx_last_disconnected(net):
    return max(m for m in range(1 << net.m) if not nx_connected(net, m))


def test_last_disconnected(bench, dia, edge):
    assert _nx_last_disconnected(dia) == 12
    assert _nx_last_disconnected(bench) == 252
    assert str(oracle_last_disconnected(dia)) == "0011"
    assert str(oracle_last_disconnected(bench)) == "00111111"
    assert str(oracle_last_disconnected(edge)) == "0"
    for net in (bench, dia, edge):
        assert last_disconnected_greedy(net) == oracle_last_disconnected(net)


def test_last_disconnected_all_disconnected(split):
    assert oracle_last_disconnected(split).mask == 3
    assert last_disconnected_greedy(split).mask == 3


@given(any_networks())
def test_connectivity_table_matches_bfs(net):
    table = connectivity_table(net)
    assert table.shape == (1 << net.m,)
    for mask in range(1 << net.m):
        assert table[mask] == connected_mask(net, mask)


def test_connectivity_table_slices(bench):
    full = connectivity_table(bench)
    assert np.array_equal(connectivity_table(bench, 40, 200), full[40:200])
    with pytest.raises(ValueError):
        connectivity_table(bench, 10, 300)


def test_connectivity_table_crosscheck_networkx(bench):
    table = connectivity_table(bench)
    assert all(table[m] == nx_connected(bench, m) for m in range(256))


@given(any_networks())
def test_greedy_last_disconnected(net):
    assert last_disconnected_greedy(net) == oracle_last_disconnected(net)


@given(connected_networks(max_m=10))
def test_coherence(net):
    e = earliest_path(net).vector
    assert oracle_first_connected(net) == e == find_xfc_correct(net)


def test_census_diamond(dia):
    r = region_census(dia)
    assert r.earliest_value == LexWeight(5) and r.latest_value == LexWeight(10)
    assert r.counts["before"] == {"total": 5, "connected": 0, "disconnected": 5, "simple_path": 0}
    assert r.counts["between"] == {"total": 6, "connected": 3, "disconnected": 3, "simple_path": 2}
    assert r.counts["after"] == {"total": 5, "connected": 4, "disconnected": 1, "simple_path": 0}
    assert r.violations == {"disconnected_after_latest": 1, "simple_path_after_latest": 0}
    assert r.last_disconnected_value == LexWeight(12)


def test_census_benchmark(bench):
    r = region_census(bench)
    assert r.earliest_value == LexWeight(69)
    assert r.latest_value == LexWeight(146)
    assert r.last_disconnected_value == LexWeight(252)
    assert r.max_value_path_value == LexWeight(165)
    assert r.counts["before"]["connected"] == 0
    assert sum(c["total"] for c in r.counts.values()) == 256
    # independent recount with networkx
    conn = [nx_connected(bench, m) for m in range(256)]
    paths = {sum(1 << (i - 1) for i in s) for s in nx_path_arc_sets(bench)}
    after = range(147, 256)
    assert r.violations["disconnected_after_latest"] == sum(not conn[m] for m in after)
    assert r.violations["simple_path_after_latest"] == sum(m in paths for m in after) == 1
    assert r.counts["between"]["connected"] == sum(conn[m] for m in range(69, 147))


def test_census_single_edge(edge):
    r = region_census(edge)
    assert r.counts["before"] == {"total": 1, "connected": 0, "disconnected": 1, "simple_path": 0}
    assert r.counts["between"] == {"total": 1, "connected": 1, "disconnected": 0, "simple_path": 1}
    assert r.counts["after"]["total"] == 0
    assert r.violations == {"disconnected_after_latest": 0, "simple_path_after_latest": 0}


def test_census_no_path(split):
    with pytest.raises(NoPathError):
        region_census(split)


@given(connected_networks(max_m=10))
def test_census_invariants(net):
    r = region_census(net)
    assert sum(c["total"] for c in r.counts.values()) == 1 << net.m
    assert r.counts["before"]["connected"] == 0
    assert r.counts["before"]["disconnected"] == r.counts["before"]["total"]
    assert r.counts["after"]["simple_path"] == r.violations["simple_path_after_latest"]
    assert sum(c["simple_path"] for c in r.counts.values()) == len(enumerate_simple_paths(net))


def _brute_reliability(net, probs):
    total = 0.0
    for bits in itertools.product((0, 1), repeat=net.m):
        mask = sum(b << i for i, b in enumerate(bits))
        if nx_connected(net, mask):
            mass = 1.0
            for b, p in zip(bits, probs):
                mass *= p if b else 1.0 - p
            total += mass
    return total


def test_reliability_examples(dia, edge, bench):
    r = reliability_exact(dia, [0.5] * 4)
    assert abs(r.probability - 0.4375) <= 1e-15
    assert (r.vectors_evaluated, r.vectors_pruned) == (16, 0)
    assert abs(reliability_exact(edge, [0.9]).probability - 0.9) <= 1e-15
    full = reliability_exact(bench, [0.5] * 8)
    cut = reliability_exact(bench, [0.5] * 8, prune=True)
    assert abs(full.probability - cut.probability) <= 1e-12
    assert cut.vectors_pruned == 69 and cut.vectors_evaluated == 256 - 69
    assert abs(full.probability - _brute_reliability(bench, [0.5] * 8)) <= 1e-12


def test_reliability_uses_file_probabilities():
    net = Network.from_edges(2, [(1, 2)], probs=[0.25])
    assert reliability_exact(net).probability == 0.25


def test_reliability_input_checks(dia):
    with pytest.raises(ValueError):
        reliability_exact(dia, [0.5] * 3)
    with pytest.raises(ValueError):
        reliability_exact(dia, [0.5, 0.5, 0.5, 1.5])


def test_reliability_disconnected(split):
    r = reliability_exact(split, [0.9, 0.9], prune=True)
    assert r.probability == 0.0 and r.vectors_pruned == 4


@given(any_networks(max_n=5))
def test_reliability_matches_brute_force(net):
    probs = [0.9 if i % 2 else 0.5 for i in range(net.m)]
    ref = _brute_reliability(net, probs)
    for prune in (False, True):
        r = reliability_exact(net, probs, prune=prune)
        assert abs(r.probability - ref) <= 1e-12
        assert r.vectors_evaluated + r.vectors_pruned == 1 << net.m


def test_caps():
    import random

    net = random_connected(random.Random(0), 20, 25)
    with pytest.raises(CapExceededError):
        enumerate_simple_paths(net)
    with pytest.raises(CapExceededError):
        oracle_first_connected(net)
    with pytest.raises(CapExceededError):
        region_census(net)
    with pytest.raises(CapExceededError):
        reliability_exact(net)
