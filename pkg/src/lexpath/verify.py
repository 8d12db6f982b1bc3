"""Batch invariant harness run by ``lexpath verify`` and the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from lexpath.bat import find_xfc_correct
from lexpath.graph import Network
from lexpath.oracle import (
    MAX_VALUE,
    MIN_EARLIEST,
    MIN_LATEST,
    connectivity_table,
    enumerate_simple_paths,
    last_disconnected_greedy,
    oracle_extreme_path,
    oracle_first_connected,
    oracle_last_disconnected,
    reliability_exact,
)
from lexpath.pathfind import PathResult, earliest_path, latest_path

PROB_CHOICES = (0.5, 0.9)


def is_simple_st_path(net: Network, path: PathResult) -> bool:
    if not path.nodes or path.nodes[0] != net.source or path.nodes[-1] != net.sink:
        return False
    if len(set(path.nodes)) != len(path.nodes) or len(path.arc_ids) != len(path.nodes) - 1:
        return False
    for (a, b), k in zip(zip(path.nodes, path.nodes[1:]), path.arc_ids):
        arc = net.arcs[k - 1]
        if {arc.u, arc.v} != {a, b}:
            return False
    return sum(path.vector) == len(path.arc_ids)


@dataclass
class Instance:
    net: Network
    probs: tuple[float, ...]
    early: PathResult = field(init=False)
    late: PathResult = field(init=False)

    def __post_init__(self) -> None:
        self.early = earliest_path(self.net, check_ties=True)
        self.late = latest_path(self.net, check_ties=True)

    @property
    def table(self) -> np.ndarray:
        if not hasattr(self, "_table"):
            self._table = connectivity_table(self.net)
        return self._table


def _validity(inst: Instance) -> bool:
    return is_simple_st_path(inst.net, inst.early) and is_simple_st_path(inst.net, inst.late)


def _earliest_coherence(inst: Instance) -> bool:
    return inst.early.vector == oracle_first_connected(inst.net) == find_xfc_correct(inst.net)


def _before_earliest_disconnected(inst: Instance) -> bool:
    return not inst.table[: inst.early.vector.mask].any()


def _dijkstra_matches_oracle(inst: Instance) -> bool:
    lo = oracle_extreme_path(inst.net, MIN_EARLIEST)
    hi = oracle_extreme_path(inst.net, MIN_LATEST)
    return (
        inst.early.weight == lo.weight
        and inst.early.arc_set == lo.arc_set
        and inst.late.weight == hi.weight
        and inst.late.arc_set == hi.arc_set
    )


def _last_disconnected_agreement(inst: Instance) -> bool:
    return last_disconnected_greedy(inst.net) == oracle_last_disconnected(inst.net)


def _after_max_path_empty(inst: Instance) -> bool:
    top = oracle_extreme_path(inst.net, MAX_VALUE).vector.mask
    return all(p.mask <= top for p in enumerate_simple_paths(inst.net))


def _pruning_sound(inst: Instance) -> bool:
    full = reliability_exact(inst.net, inst.probs, prune=False)
    cut = reliability_exact(inst.net, inst.probs, prune=True)
    return (
        abs(full.probability - cut.probability) <= 1e-12
        and cut.vectors_pruned == inst.early.vector.mask
        and full.vectors_pruned == 0
    )


def _after_latest_connected(inst: Instance) -> bool:
    return bool(inst.table[inst.late.vector.mask + 1 :].all())


def _after_latest_no_simple_path(inst: Instance) -> bool:
    cut = inst.late.vector.mask
    return all(p.mask <= cut for p in enumerate_simple_paths(inst.net))


MANDATORY: dict[str, Callable[[Instance], bool]] = {
    "path_validity": _validity,
    "earliest_coherence": _earliest_coherence,
    "before_earliest_disconnected": _before_earliest_disconnected,
    "dijkstra_matches_oracle": _dijkstra_matches_oracle,
    "last_disconnected_agreement": _last_disconnected_agreement,
    "after_max_path_no_simple_path": _after_max_path_empty,
    "reliability_pruning_sound": _pruning_sound,
}

# Claims about the region after the latest path; measured, never enforced.
REPORTED: dict[str, Callable[[Instance], bool]] = {
    "claim_after_latest_connected": _after_latest_connected,
    "claim_after_latest_no_simple_path": _after_latest_no_simple_path,
}


@dataclass
class Tally:
    name: str
    mandatory: bool
    passed: int = 0
    failed: int = 0
    first_failure: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        if self.mandatory:
            status = "PASS" if self.ok else "FAIL"
        else:
            status = "HOLDS" if self.ok else "VIOLATED"
        text = f"{status:8s} {self.name}: {self.passed} held, {self.failed} failed"
        if self.first_failure is not None:
            text += f" (first at case {self.first_failure})"
        return text


@dataclass
class VerifyReport:
    cases: int
    tallies: list[Tally]

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.tallies if t.mandatory)

    def to_dict(self) -> dict:
        return {
            "cases": self.cases,
            "ok": self.ok,
            "invariants": [
                {
                    "name": t.name,
                    "mandatory": t.mandatory,
                    "passed": t.passed,
                    "failed": t.failed,
                    "first_failure": t.first_failure,
                }
                for t in self.tallies
            ],
        }


def run_invariants(nets: list[Network], seed: int = 0) -> VerifyReport:
    """Check every invariant on every network; ``seed`` drives the arc probabilities."""
    rng = random.Random(seed)
    tallies = [Tally(n, True) for n in MANDATORY] + [Tally(n, False) for n in REPORTED]
    checks = list(MANDATORY.values()) + list(REPORTED.values())
    for case, net in enumerate(nets):
        probs = tuple(rng.choice(PROB_CHOICES) for _ in range(net.m))
        try:
            inst = Instance(net, probs)
        except AssertionError:
            inst = None
        for tally, check in zip(tallies, checks):
            try:
                good = inst is not None and inst.early is not None and check(inst)
            except AssertionError:
                good = False
            if good:
                tally.passed += 1
            else:
                tally.failed += 1
                if tally.first_failure is None:
                    tally.first_failure = case
    return VerifyReport(len(nets), tallies)
