"""Brute-force ground truth: scan all of S_n and tally k-th roots.

Deliberately naive. Permutations are tuples of images of ``0..n-1``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import RootCount
from .cycletype import CycleType

__all__ = [
    "MAX_N",
    "Permutation",
    "all_permutations",
    "permutation_range",
    "unrank",
    "power",
    "power_naive",
    "compose",
    "cycles_of",
    "cycle_type_of",
    "parity_of",
    "canonical_permutation",
    "oracle_count_roots",
]

MAX_N = 10


@dataclass(frozen=True)
class Permutation:
    """One-line notation: ``word[i]`` is the image of ``i`` (0-based)."""

    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(len(self.word))):
            raise ValueError(f"{self.word} is not a permutation of 0..{len(self.word) - 1}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        word = list(range(n))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                word[a] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        cyc = [c for c in cycles_of(self.word) if len(c) > 1]
        return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cyc) or "()"


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"oracle supports 0 <= n <= {MAX_N}, got {n}")


def _next_lex(a: list[int]) -> bool:
    # In-place lexicographic successor; False once ``a`` is the last permutation.
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def unrank(n: int, rank: int) -> tuple[int, ...]:
    """The permutation at position ``rank`` of the lexicographic order of S_n."""
    pool = list(range(n))
    out = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        q, rank = divmod(rank, f)
        out.append(pool.pop(q))
    return tuple(out)


def permutation_range(n: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Words with lexicographic ranks ``start <= r < stop``."""
    _check_n(n)
    stop = min(stop, math.factorial(n))
    if start >= stop:
        return
    a = list(unrank(n, start))
    for _ in range(stop - start):
        yield tuple(a)
        if not _next_lex(a):
            return


def all_permutations(n: int) -> Iterator[Permutation]:
    """All ``n!`` permutations in lexicographic order."""
    for w in permutation_range(n, 0, math.factorial(n)):
        yield Permutation(w)


def cycles_of(word: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(word)
    out = []
    for start in range(len(word)):
        if seen[start]:
            continue
        cyc = []
        a = start
        while not seen[a]:
            seen[a] = True
            cyc.append(a)
            a = word[a]
        out.append(cyc)
    return out


def _power_word(word: Sequence[int], k: int) -> tuple[int, ...]:
    # Within an l-cycle, x^k sends position i to position (i + k) mod l.
    out = [0] * len(word)
    for cyc in cycles_of(word):
        ell = len(cyc)
        s = k % ell
        for i, a in enumerate(cyc):
            out[a] = cyc[(i + s) % ell]
    return tuple(out)


def power(p: Permutation, k: int) -> Permutation:
    """``p`` composed with itself ``k`` times, computed cycle by cycle."""
    if k < 1:
        raise ValueError("k must be positive")
    return Permutation(_power_word(p.word, k))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q`` first, then ``p``."""
    return Permutation(tuple(p.word[q.word[i]] for i in range(len(q.word))))


def power_naive(p: Permutation, k: int) -> Permutation:
    out = Permutation.identity(p.n)
    for _ in range(k):
        out = compose(p, out)
    return out


def cycle_type_of(p: Permutation) -> CycleType:
    counts: dict[int, int] = {}
    for cyc in cycles_of(p.word):
        counts[len(cyc)] = counts.get(len(cyc), 0) + 1
    return CycleType.from_mapping(counts)


def _parity_word(word: Sequence[int]) -> int:
    return -1 if (len(word) - len(cycles_of(word))) % 2 else 1


def parity_of(p: Permutation) -> int:
    """+1 for even, -1 for odd: ``(-1)^(n - #cycles)`` counting fixed points."""
    return _parity_word(p.word)


def canonical_permutation(c: CycleType) -> Permutation:
    """Cycles on consecutive blocks of points, shortest lengths first."""
    cycles = []
    start = 0
    for ell, mult in c.parts:
        for _ in range(mult):
            cycles.append(list(range(start, start + ell)))
            start += ell
    return Permutation.from_cycles(c.n, cycles)


def _scan(n: int, k: int, target: tuple[int, ...], start: int, stop: int) -> tuple[int, int]:
    even = odd = 0
    for w in permutation_range(n, start, stop):
        if _power_word(w, k) == target:
            if _parity_word(w) == 1:
                even += 1
            else:
                odd += 1
    return even, odd


def oracle_count_roots(
    k: int,
    c: CycleType,
    workers: int = 1,
    sigma: Permutation | None = None,
) -> RootCount:
    """Count ``tau`` in S_n with ``tau^k == sigma`` by exhaustive scan.

    ``sigma`` defaults to the canonical permutation of type ``c``; passing a
    conjugate lets callers check that the count is a class function. With
    ``workers > 1`` the lexicographic rank range is split into contiguous
    chunks scanned in separate processes.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = c.n
    _check_n(n)
    if sigma is None:
        sigma = canonical_permutation(c)
    elif cycle_type_of(sigma) != c:
        raise ValueError("sigma does not have cycle type c")
    total = math.factorial(n)
    if workers <= 1 or total < 5040:
        even, odd = _scan(n, k, sigma.word, 0, total)
    else:
        step = -(-total // workers)
        bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, *zip(*[(n, k, sigma.word, a, b) for a, b in bounds])))
        even = sum(e for e, _ in parts)
        odd = sum(o for _, o in parts)
    return RootCount(even + odd, even, odd)
