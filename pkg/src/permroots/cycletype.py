"""Cycle types of permutations, stored sparsely as ``length -> multiplicity``."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

__all__ = [
    "CycleType",
    "CycleTypeSyntaxError",
    "parse_cycle_type",
    "format_cycle_type",
    "partitions_of",
    "parity_of_type",
    "class_size",
]


class CycleTypeSyntaxError(ValueError):
    """Raised when cycle-type text cannot be parsed.

    ``position`` is the 0-based character offset of the offending term.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class CycleType:
    """A cycle type ``(l_1)^{c_1} ... (l_m)^{c_m}``.

    ``parts`` holds ``(length, multiplicity)`` pairs with ascending lengths and
    positive multiplicities. Use :meth:`from_mapping` to build one from a dict.
    """

    parts: tuple[tuple[int, int], ...] = ()
    n: int = field(init=False)

    def __post_init__(self):
        prev = 0
        for length, mult in self.parts:
            if length <= prev:
                raise ValueError("cycle lengths must be positive and strictly ascending")
            if mult < 1:
                raise ValueError(f"multiplicity of length {length} must be positive")
            prev = length
        object.__setattr__(self, "n", sum(l * c for l, c in self.parts))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> CycleType:
        """Build from ``{length: multiplicity}``; zero multiplicities are dropped."""
        for length, mult in mapping.items():
            if length < 1 or mult < 0:
                raise ValueError(f"invalid term {length}^{mult}")
        return cls(tuple(sorted((l, c) for l, c in mapping.items() if c)))

    @classmethod
    def identity(cls, n: int) -> CycleType:
        return cls(((1, n),)) if n else cls()

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)

    def multiplicity(self, length: int) -> int:
        for l, c in self.parts:
            if l == length:
                return c
        return 0

    def lengths(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.parts)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_cycle_type(self)


_TERM = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_cycle_type(text: str) -> CycleType:
    """Parse ``"l^c,l^c,..."`` (a bare ``l`` means multiplicity 1).

    Blank text denotes the empty cycle type of S_0.

    >>> parse_cycle_type("2^2,5").as_dict()
    {2: 2, 5: 1}
    """
    if not text.strip():
        return CycleType()
    parts: dict[int, int] = {}
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise CycleTypeSyntaxError("expected a term of the form <length>^<multiplicity>", pos)
        length = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if length == 0:
            raise CycleTypeSyntaxError("cycle length must be at least 1", m.start(1))
        if mult == 0:
            raise CycleTypeSyntaxError(f"multiplicity of length {length} must be at least 1", m.start(2))
        if length in parts:
            raise CycleTypeSyntaxError(f"duplicate cycle length {length}", m.start(1))
        parts[length] = mult
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise CycleTypeSyntaxError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return CycleType.from_mapping(parts)


def format_cycle_type(c: CycleType) -> str:
    """Canonical text: ascending lengths, every term written as ``l^c``."""
    return ",".join(f"{l}^{m}" for l, m in c.parts)


def partitions_of(n: int) -> Iterator[CycleType]:
    """Yield every cycle type of size ``n`` exactly once.

    Order is descending lexicographic on the multiplicity vector
    ``(c_1, ..., c_n)``, so ``1^n`` comes first and ``n^1`` last.
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(length: int, remaining: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if remaining == 0:
            yield ()
            return
        if length > remaining:
            return
        for mult in range(remaining // length, -1, -1):
            head = ((length, mult),) if mult else ()
            for tail in rec(length + 1, remaining - length * mult):
                yield head + tail

    for parts in rec(1, n):
        yield CycleType(parts)


def parity_of_type(c: CycleType) -> int:
    """+1 if permutations of type ``c`` are even, else -1.

    An l-cycle has sign (-1)^(l+1), so only even lengths with odd
    multiplicity flip the sign.
    """
    odd = sum(m for l, m in c.parts if l % 2 == 0)
    return -1 if odd % 2 else 1


def class_size(c: CycleType) -> int:
    """Number of permutations of S_n with cycle type ``c``."""
    denom = 1
    for l, m in c.parts:
        denom *= l**m * math.factorial(m)
    return math.factorial(c.n) // denom
