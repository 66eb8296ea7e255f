"""Closed-form counts of even, odd and total k-th roots by cycle type.

Roots of a permutation of type ``(l)^c`` are assembled from blocks: for each
``g`` in ``G_k(l)``, some ``g*p_g`` of the l-cycles are covered by ``p_g``
cycles of length ``g*l``. The even-minus-odd difference is multiplicative over
distinct cycle lengths, so a general cycle type reduces to one length at a
time. Everything here stays in exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .cycletype import CycleType
from .gset import RootDivisorSet, g_set

__all__ = [
    "RootCount",
    "root_multiplicity",
    "sign_of_block",
    "enumerate_solutions",
    "single_length_counts",
    "single_length_difference",
    "count_roots",
    "has_kth_root",
]


@dataclass(frozen=True)
class RootCount:
    total: int
    even: int
    odd: int

    def __post_init__(self):
        if min(self.total, self.even, self.odd) < 0 or self.even + self.odd != self.total:
            raise ValueError(f"inconsistent root count {self}")

    @property
    def difference(self) -> int:
        return self.even - self.odd

    @classmethod
    def from_total_and_difference(cls, total: int, difference: int) -> RootCount:
        return cls(total, _halve(total + difference), _halve(total - difference))


def _halve(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"expected an even integer before halving, got {x}")
    return x // 2


def root_multiplicity(k: int, ell: int, g: int, p: int) -> int:
    """Number of permutations of type ``(g*l)^p`` whose k-th power is a fixed
    permutation of type ``(l)^(g*p)``; zero when ``g`` is not in ``G_k(l)``.

    Equals ``(g*p)! * l^(p*(g-1)) / (g^p * p!)``.
    """
    if p == 0:
        return 1
    if g not in g_set(k, ell):
        return 0
    num = math.factorial(g * p) * ell ** (p * (g - 1))
    den = g**p * math.factorial(p)
    q, r = divmod(num, den)
    assert r == 0, (k, ell, g, p)
    return q


def sign_of_block(ell: int, g: int, p: int) -> int:
    """Sign of a product of ``p`` disjoint cycles of length ``l*g``."""
    return -1 if (p * (ell * g + 1)) % 2 else 1


def enumerate_solutions(gset: RootDivisorSet | tuple[int, ...], c: int) -> Iterator[dict[int, int]]:
    """Yield every ``{g: p_g}`` with ``sum g*p_g == c`` over the members of ``gset``.

    Depth-first over descending ``g``; each ``p_g`` runs from its maximum
    ``remaining // g`` down to 0, giving lexicographic order (descending) in
    the descending-``g`` coordinates.
    """
    gs = sorted(gset, reverse=True)

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == len(gs):
            if remaining == 0:
                yield ()
            return
        g = gs[i]
        if i == len(gs) - 1:
            if remaining % g == 0:
                yield (remaining // g,)
            return
        for p in range(remaining // g, -1, -1):
            for rest in rec(i + 1, remaining - g * p):
                yield (p,) + rest

    for ps in rec(0, c):
        yield dict(zip(gs, ps))


def _solution_weight(k: int, ell: int, c: int, sol: dict[int, int]) -> int:
    # Choose which l-cycles go to each g-block (multinomial), then count the
    # ways each block is realised.
    ways = math.factorial(c)
    for g, p in sol.items():
        ways //= math.factorial(g * p)
    for g, p in sol.items():
        ways *= root_multiplicity(k, ell, g, p)
    return ways


def _single_length(k: int, ell: int, c: int) -> tuple[int, int]:
    gs = g_set(k, ell)
    total = diff = 0
    for sol in enumerate_solutions(gs, c):
        w = _solution_weight(k, ell, c, sol)
        sign = 1
        for g, p in sol.items():
            sign *= sign_of_block(ell, g, p)
        total += w
        diff += sign * w
    return total, diff


def single_length_difference(k: int, ell: int, c: int) -> int:
    """(#even) - (#odd) k-th roots of a permutation of type ``(l)^c``."""
    return _single_length(k, ell, c)[1]


def single_length_counts(k: int, ell: int, c: int) -> RootCount:
    """Root counts for a permutation whose cycles all have length ``l``."""
    if k < 1 or ell < 1 or c < 0:
        raise ValueError("need k, l >= 1 and c >= 0")
    return RootCount.from_total_and_difference(*_single_length(k, ell, c))


def count_roots(k: int, c: CycleType) -> RootCount:
    """Total, even and odd k-th roots of a permutation of cycle type ``c``.

    The total and the even-minus-odd difference are both products over the
    distinct cycle lengths; even/odd follow as ``(total +/- difference) / 2``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    total = diff = 1
    for ell, mult in c.parts:
        t, d = _single_length(k, ell, mult)
        total *= t
        diff *= d
        if not total:
            break
    if not total:
        return RootCount(0, 0, 0)
    return RootCount.from_total_and_difference(total, diff)


def has_kth_root(k: int, c: CycleType) -> bool:
    """True iff every length ``l`` of ``c`` admits ``sum g*x_g = c_l`` over ``G_k(l)``."""
    if k < 1:
        raise ValueError("k must be positive")
    for ell, mult in c.parts:
        if next(enumerate_solutions(g_set(k, ell), mult), None) is None:
            return False
    return True
