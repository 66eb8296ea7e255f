"""Divisor sets ``G_k(l) = {g : gcd(g*l, k) = g}``.

A ``(g*l)``-cycle raised to the k-th power splits into ``g`` cycles of length
``l`` exactly when ``g`` is in this set, so it lists the cycle lengths a k-th
root may use to cover the l-cycles of a permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

__all__ = [
    "RootDivisorSet",
    "g_set",
    "g_set_by_definition",
    "g_set_by_factorization",
    "prime_factorization",
]


@dataclass(frozen=True)
class RootDivisorSet:
    k: int
    ell: int
    members: tuple[int, ...]

    @property
    def go(self) -> tuple[int, ...]:
        """Odd members."""
        return tuple(g for g in self.members if g % 2)

    @property
    def ge(self) -> tuple[int, ...]:
        """Even members."""
        return tuple(g for g in self.members if g % 2 == 0)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members


def _check(k: int, ell: int) -> None:
    if k < 1 or ell < 1:
        raise ValueError(f"k and l must be positive integers, got k={k}, l={ell}")


def g_set_by_definition(k: int, ell: int) -> RootDivisorSet:
    """Scan g = 1..k for gcd(g*l, k) == g. Any member divides k."""
    _check(k, ell)
    return RootDivisorSet(k, ell, tuple(g for g in range(1, k + 1) if gcd(g * ell, k) == g))


def prime_factorization(k: int) -> list[tuple[int, int]]:
    """Trial division; returns ``[(p, a), ...]`` with ascending primes."""
    if k < 1:
        raise ValueError("k must be positive")
    factors = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            a = 0
            while k % p == 0:
                k //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if k > 1:
        factors.append((k, 1))
    return factors


def g_set_by_factorization(k: int, ell: int) -> RootDivisorSet:
    """Build G_k(l) from ``k = prod p_i^a_i``.

    The exponent of ``p_i`` is pinned to ``a_i`` when ``p_i`` divides ``l`` and
    ranges over ``0..a_i`` otherwise.
    """
    _check(k, ell)
    choices = []
    for p, a in prime_factorization(k):
        if ell % p == 0:
            choices.append([p**a])
        else:
            choices.append([p**b for b in range(a + 1)])
    members = set()
    for combo in product(*choices):
        g = 1
        for q in combo:
            g *= q
        members.add(g)
    return RootDivisorSet(k, ell, tuple(sorted(members)))


g_set = g_set_by_definition
