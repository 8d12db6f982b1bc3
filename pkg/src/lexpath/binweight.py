"""Exact power-of-two arc weights and the BAT order on state vectors.

Weights grow as ``2**m`` so they are held as Python integers rather than
floats or fixed-width words.  ``LexWeight`` adds an explicit infinity so an
unreached node can never collide with a finite distance.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Literal

from lexpath.graph import StateVector

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1

EARLIEST = "earliest"
LATEST = "latest"


@functools.total_ordering
class LexWeight:
    """Non-negative integer or infinity."""

    __slots__ = ("_value",)

    def __init__(self, value: int | None):
        if value is not None:
            value = int(value)
            if value < 0:
                raise ValueError(f"weights are non-negative, got {value}")
        self._value = value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("infinite weight has no integer value")
        return self._value

    def words(self) -> tuple[int, ...]:
        """Little-endian 64-bit words, no trailing zero words (zero -> ())."""
        v = self.value
        out = []
        while v:
            out.append(v & _WORD_MASK)
            v >>= WORD_BITS
        return tuple(out)

    @classmethod
    def from_words(cls, words) -> "LexWeight":
        words = tuple(words)
        if words and words[-1] == 0:
            raise ValueError("non-canonical word array (trailing zero word)")
        v = 0
        for w in reversed(words):
            if not 0 <= w <= _WORD_MASK:
                raise ValueError(f"word out of range: {w}")
            v = (v << WORD_BITS) | w
        return cls(v)

    def __add__(self, other: "LexWeight") -> "LexWeight":
        if not isinstance(other, LexWeight):
            return NotImplemented
        if self._value is None or other._value is None:
            return INFINITY
        return LexWeight(self._value + other._value)

    def __eq__(self, other) -> bool:
        if isinstance(other, LexWeight):
            return self._value == other._value
        if isinstance(other, int) and self._value is not None:
            return self._value == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = LexWeight(other)
        if not isinstance(other, LexWeight):
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(("LexWeight", self._value))

    def __repr__(self) -> str:
        return "LexWeight(inf)" if self._value is None else f"LexWeight({self._value})"

    def __str__(self) -> str:
        return self.decimal()

    def decimal(self) -> str:
        return "inf" if self._value is None else str(self._value)

    def binary(self, width: int | None = None) -> str:
        """Bit string with the ``2**0`` bit first, zero-padded to ``width``."""
        if self._value is None:
            return "inf"
        bits = format(self._value, "b")[::-1] if self._value else ""
        if width is not None:
            if len(bits) > width:
                raise ValueError(f"{self._value} needs more than {width} bits")
            bits = bits.ljust(width, "0")
        return bits or "0"

    @classmethod
    def parse_binary(cls, text: str) -> "LexWeight":
        if text == "inf":
            return INFINITY
        return cls(int(text[::-1], 2))

    @classmethod
    def parse_decimal(cls, text: str) -> "LexWeight":
        return INFINITY if text == "inf" else cls(int(text))


INFINITY = LexWeight(None)
ZERO = LexWeight(0)


@dataclass(frozen=True)
class WeightScheme:
    kind: Literal["earliest", "latest"]
    m: int

    def __post_init__(self) -> None:
        if self.kind not in (EARLIEST, LATEST):
            raise ValueError(f"unknown weight scheme {self.kind!r}")
        if self.m < 1:
            raise ValueError(f"scheme needs m >= 1, got {self.m}")

    def shift(self, i: int) -> int:
        """Exponent of the single set bit in arc ``i``'s weight."""
        if not 1 <= i <= self.m:
            raise IndexError(f"arc {i} outside 1..{self.m}")
        return i - 1 if self.kind == EARLIEST else self.m - i


def weight_of_arc(scheme: WeightScheme, i: int) -> LexWeight:
    return LexWeight(1 << scheme.shift(i))


def lex_add(a: LexWeight, b: LexWeight) -> LexWeight:
    return a + b


def lex_cmp(a: LexWeight, b: LexWeight) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if a == b:
        return 0
    return -1 if a < b else 1


def vector_value(x: StateVector) -> LexWeight:
    """Zero-based BAT position of ``x``: sum of ``2**(i-1)`` over working arcs."""
    return LexWeight(x.mask)


def bat_precedes(x: StateVector, y: StateVector) -> bool:
    """``x << y``: at the highest differing arc, ``x`` is 0 and ``y`` is 1."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    for i in range(len(x) - 1, -1, -1):
        if x[i] != y[i]:
            return x[i] < y[i]
    return False
