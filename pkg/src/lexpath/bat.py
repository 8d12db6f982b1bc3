"""BAT enumeration and greedy searches for the first connected vector."""

from __future__ import annotations

from typing import Iterator

from lexpath.graph import Network, StateVector, connected_mask

ENUM_CAP = 24


class CapExceededError(ValueError):
    """Exhaustive work requested beyond the safety cap without ``force``."""


class DisconnectedError(ValueError):
    """Source and sink are disconnected even with every arc working."""


def check_cap(k: int, force: bool = False, cap: int = ENUM_CAP) -> None:
    if k > cap and not force:
        raise CapExceededError(f"2**{k} vectors exceeds the 2**{cap} cap; pass force")


def bat_next(x: StateVector) -> StateVector | None:
    """Successor of ``x`` in BAT order, ``None`` after the all-ones vector.

    Finds the first 0 coordinate, sets it and clears every coordinate before it.
    """
    bits = list(x.bits)
    for i, b in enumerate(bits):
        if b == 0:
            bits[i] = 1
            bits[:i] = [0] * i
            return StateVector(tuple(bits))
    return None


def bat_enumerate(k: int, force: bool = False) -> Iterator[StateVector]:
    """All ``2**k`` vectors of length ``k`` in BAT order, starting at zero."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    check_cap(k, force)
    x: StateVector | None = StateVector.zeros(k)
    while x is not None:
        yield x
        x = bat_next(x)


def _require_connected(net: Network) -> None:
    if not connected_mask(net, (1 << net.m) - 1):
        raise DisconnectedError("source and sink are disconnected with all arcs working")


def find_xfc_paper(net: Network) -> StateVector:
    """Forward-minimum-cut greedy scanned from arc 1 upward.

    Arc ``j`` is switched off unless doing so (with arcs ``< j`` as already
    decided and arcs ``> j`` working) cuts source from sink.  This is a local
    rule and can overshoot the true first connected vector.
    """
    _require_connected(net)
    full = (1 << net.m) - 1
    mask = full
    for j in range(net.m):
        trial = mask & ~(1 << j)
        if connected_mask(net, trial):
            mask = trial
    return StateVector.from_mask(mask, net.m)


def find_xfc_correct(net: Network) -> StateVector:
    """BAT-minimal connected vector, deciding arcs from ``m`` down to 1.

    Arc ``j`` is kept only if the graph with the higher arcs as decided and
    every lower arc working would otherwise be disconnected.
    """
    _require_connected(net)
    mask = (1 << net.m) - 1
    for j in range(net.m - 1, -1, -1):
        trial = mask & ~(1 << j)
        if connected_mask(net, trial):
            mask = trial
    return StateVector.from_mask(mask, net.m)
