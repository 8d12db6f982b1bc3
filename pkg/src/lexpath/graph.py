"""Network model, edge-list parsing and two-terminal connectivity.

Nodes and arcs are 1-based throughout.  A state vector is stored as a tuple of
0/1 ints where position ``i - 1`` holds the state of arc ``i``.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO


class NetworkError(ValueError):
    """Malformed or structurally invalid network input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Arc:
    id: int
    u: int
    v: int
    p: float = 1.0

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


@dataclass(frozen=True)
class Network:
    n: int
    arcs: tuple[Arc, ...]
    source: int
    sink: int
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))
        if self.n < 2:
            raise NetworkError(f"need at least 2 nodes, got {self.n}")
        for name in ("source", "sink"):
            node = getattr(self, name)
            if not 1 <= node <= self.n:
                raise NetworkError(f"{name} {node} outside 1..{self.n}")
        if self.source == self.sink:
            raise NetworkError("source and sink must differ")
        seen: dict[frozenset[int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for k, arc in enumerate(self.arcs, start=1):
            if arc.id != k:
                raise NetworkError(f"arc ids must be dense 1..m, found {arc.id} at {k}")
            for end in (arc.u, arc.v):
                if not 1 <= end <= self.n:
                    raise NetworkError(f"arc {k}: endpoint {end} outside 1..{self.n}")
            if arc.u == arc.v:
                raise NetworkError(f"arc {k}: self-loop at node {arc.u}")
            key = frozenset((arc.u, arc.v))
            if key in seen:
                raise NetworkError(f"arc {k}: parallel to arc {seen[key]}")
            seen[key] = k
            if not 0.0 <= arc.p <= 1.0:
                raise NetworkError(f"arc {k}: probability {arc.p} outside [0, 1]")
            adj[arc.u].append((arc.v, k))
            adj[arc.v].append((arc.u, k))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(a.p for a in self.arcs)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        source: int = 1,
        sink: int | None = None,
        probs: Sequence[float] | None = None,
    ) -> "Network":
        edges = list(edges)
        if probs is None:
            probs = [1.0] * len(edges)
        arcs = tuple(
            Arc(k, int(u), int(v), float(p))
            for k, ((u, v), p) in enumerate(zip(edges, probs), start=1)
        )
        return cls(n, arcs, source, n if sink is None else sink)

    def summary(self) -> dict[str, int]:
        return {"n": self.n, "m": self.m, "source": self.source, "sink": self.sink}


@functools.total_ordering
@dataclass(frozen=True)
class StateVector:
    """Working/failed state of every arc; ordered by BAT position."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"state bits must be 0 or 1: {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __lt__(self, other: "StateVector") -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("cannot order state vectors of different length")
        return self.mask < other.mask

    @functools.cached_property
    def mask(self) -> int:
        """Integer with bit ``i - 1`` set iff arc ``i`` works."""
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    @property
    def arc_ids(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits, start=1) if b)

    @classmethod
    def parse(cls, text: str) -> "StateVector":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_mask(cls, mask: int, m: int) -> "StateVector":
        if mask < 0 or mask >> m:
            raise ValueError(f"mask {mask} does not fit in {m} bits")
        return cls(tuple((mask >> i) & 1 for i in range(m)))

    @classmethod
    def from_arcs(cls, arc_ids: Iterable[int], m: int) -> "StateVector":
        bits = [0] * m
        for i in arc_ids:
            bits[i - 1] = 1
        return cls(tuple(bits))

    @classmethod
    def zeros(cls, m: int) -> "StateVector":
        return cls((0,) * m)

    @classmethod
    def ones(cls, m: int) -> "StateVector":
        return cls((1,) * m)


def parse_network(stream: TextIO | str) -> Network:
    """Parse the ``n m s t`` header plus ``u v [p]`` arc lines.

    Line ``k`` of the arc section defines arc ``k``.  Blank lines and lines
    starting with ``#`` are ignored.
    """
    text = stream if isinstance(stream, str) else stream.read()
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise NetworkError("empty input")

    lineno, header = rows[0]
    if len(header) != 4:
        raise NetworkError("header must be 'n m source sink'", lineno)
    n, m, source, sink = (_parse_int(tok, lineno) for tok in header)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise NetworkError(f"header declares {m} arcs, found {len(body)}", last)

    arcs = []
    seen: dict[frozenset[int], int] = {}
    for k, (lineno, tokens) in enumerate(body, start=1):
        if len(tokens) not in (2, 3):
            raise NetworkError("arc line must be 'u v [p]'", lineno)
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        p = _parse_prob(tokens[2], lineno) if len(tokens) == 3 else 1.0
        for end in (u, v):
            if not 1 <= end <= n:
                raise NetworkError(f"endpoint {end} outside 1..{n}", lineno)
        if u == v:
            raise NetworkError(f"self-loop at node {u}", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise NetworkError(f"parallel to arc {seen[key]}", lineno)
        seen[key] = k
        arcs.append(Arc(k, u, v, p))
    try:
        return Network(n, tuple(arcs), source, sink)
    except NetworkError as exc:
        raise NetworkError(str(exc), rows[0][0]) from None


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise NetworkError(f"expected integer, got {token!r}", lineno) from None


def _parse_prob(token: str, lineno: int) -> float:
    try:
        p = float(token)
    except ValueError:
        raise NetworkError(f"expected probability, got {token!r}", lineno) from None
    if not 0.0 <= p <= 1.0:
        raise NetworkError(f"probability {token} outside [0, 1]", lineno)
    return p


def read_network(path) -> Network:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh)


def format_network(net: Network) -> str:
    """Canonical edge-list text; ``parse_network`` inverts it exactly."""
    lines = [f"{net.n} {net.m} {net.source} {net.sink}"]
    for arc in net.arcs:
        if arc.p == 1.0:
            lines.append(f"{arc.u} {arc.v}")
        else:
            lines.append(f"{arc.u} {arc.v} {arc.p!r}")
    return "\n".join(lines) + "\n"


def validate_network(net: Network) -> list[str]:
    """Diagnostics for inputs that break the interconnection assumption."""
    warnings = []
    if not connected_mask(net, (1 << net.m) - 1):
        warnings.append(
            f"source {net.source} and sink {net.sink} are not connected "
            "even with every arc working"
        )
    isolated = [v for v in range(1, net.n + 1) if not net.adjacency[v]]
    if isolated:
        warnings.append("isolated nodes: " + ", ".join(map(str, isolated)))
    return warnings


def connected_mask(net: Network, mask: int) -> bool:
    """BFS from the source over arcs whose bit ``id - 1`` is set in ``mask``."""
    adj = net.adjacency
    sink = net.sink
    seen = {net.source}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for v, k in adj[u]:
            if v not in seen and (mask >> (k - 1)) & 1:
                if v == sink:
                    return True
                seen.add(v)
                queue.append(v)
    return False


def is_st_connected(net: Network, x: StateVector) -> bool:
    if len(x) != net.m:
        raise ValueError(f"state vector has length {len(x)}, network has {net.m} arcs")
    return connected_mask(net, x.mask)
