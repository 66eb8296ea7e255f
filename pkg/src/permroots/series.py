"""Truncated multivariate power series over the rationals.

Variable ``t_l`` carries weight ``l``; a series of truncation ``N`` keeps only
monomials of total weight at most ``N``. Under this grading the weight of a
monomial ``prod t_l^{c_l}`` is the size of permutations of cycle type ``c``,
which is what makes EGF coefficient extraction by cycle type work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .cycletype import CycleType
from .gset import g_set

__all__ = [
    "Monomial",
    "EgfSeries",
    "series_add",
    "series_mul",
    "series_exp",
    "series_cosh",
    "series_sinh",
    "egf_coefficient",
    "root_exponent",
    "build_total_root_series",
    "build_signed_difference_series",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class Monomial:
    """``prod t_l^{e_l}`` stored as ascending ``(l, e_l)`` pairs with ``e_l >= 1``."""

    exponents: tuple[tuple[int, int], ...] = ()
    weight: int = field(init=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", sum(v * e for v, e in self.exponents))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> Monomial:
        return cls(tuple(sorted((v, e) for v, e in mapping.items() if e)))

    @classmethod
    def of_cycle_type(cls, c: CycleType) -> Monomial:
        return cls(c.parts)

    def __mul__(self, other: Monomial) -> Monomial:
        a, b = self.exponents, other.exponents
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va == vb:
                out.append((va, ea + eb))
                i += 1
                j += 1
            elif va < vb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial(tuple(out))

    def sort_key(self) -> tuple:
        """Graded lexicographic: by weight, then by the exponent pairs."""
        return (self.weight, self.exponents)

    def __str__(self) -> str:
        return " ".join(f"{v}^{e}" for v, e in self.exponents)


_ONE = Monomial()


class EgfSeries:
    """Immutable truncated series ``sum coeff * monomial``.

    Binary operations between series of different truncations take the
    smaller truncation.
    """

    __slots__ = ("truncation", "_terms", "_buckets")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]], truncation: int):
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            if mono.weight > truncation:
                continue
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
                if not clean[mono]:
                    del clean[mono]
        self.truncation = truncation
        self._terms = clean
        self._buckets: list[list[tuple[Monomial, Fraction]]] | None = None

    # -- construction --

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], truncation: int) -> EgfSeries:
        # Trusts the caller: weights within truncation, no zero coefficients.
        s = cls.__new__(cls)
        s.truncation = truncation
        s._terms = terms
        s._buckets = None
        return s

    @classmethod
    def zero(cls, truncation: int) -> EgfSeries:
        return cls({}, truncation)

    @classmethod
    def constant(cls, value: Scalar, truncation: int) -> EgfSeries:
        return cls({_ONE: value}, truncation)

    @classmethod
    def one(cls, truncation: int) -> EgfSeries:
        return cls.constant(1, truncation)

    @classmethod
    def term(cls, coeff: Scalar, exponents: Mapping[int, int], truncation: int) -> EgfSeries:
        """``coeff * prod t_l^{e_l}``, e.g. ``term(Fraction(1, 2), {1: 2}, N)``."""
        return cls({Monomial.from_mapping(exponents): coeff}, truncation)

    @classmethod
    def variable(cls, index: int, truncation: int) -> EgfSeries:
        return cls.term(1, {index: 1}, truncation)

    # -- inspection --

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial | Mapping[int, int]) -> Fraction:
        if not isinstance(mono, Monomial):
            mono = Monomial.from_mapping(mono)
        return self._terms.get(mono, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(_ONE, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order."""
        for mono in sorted(self._terms, key=Monomial.sort_key):
            yield mono, self._terms[mono]

    def min_weight(self) -> int | None:
        return min((m.weight for m in self._terms), default=None)

    def truncate(self, truncation: int) -> EgfSeries:
        return EgfSeries(self._terms, min(truncation, self.truncation))

    def _by_weight(self) -> list[list[tuple[Monomial, Fraction]]]:
        if self._buckets is None:
            buckets: list[list[tuple[Monomial, Fraction]]] = [[] for _ in range(self.truncation + 1)]
            for mono, coeff in self._terms.items():
                buckets[mono.weight].append((mono, coeff))
            self._buckets = buckets
        return self._buckets

    # -- arithmetic --

    def __add__(self, other: EgfSeries | Scalar) -> EgfSeries:
        if not isinstance(other, EgfSeries):
            other = EgfSeries.constant(other, self.truncation)
        n = min(self.truncation, other.truncation)
        out = {m: c for m, c in self._terms.items() if m.weight <= n}
        for m, c in other._terms.items():
            if m.weight > n:
                continue
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return EgfSeries._raw(out, n)

    __radd__ = __add__

    def __neg__(self) -> EgfSeries:
        return EgfSeries._raw({m: -c for m, c in self._terms.items()}, self.truncation)

    def __sub__(self, other: EgfSeries | Scalar) -> EgfSeries:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> EgfSeries:
        return (-self) + other

    def __mul__(self, other: EgfSeries | Scalar) -> EgfSeries:
        if not isinstance(other, EgfSeries):
            other = Fraction(other)
            if not other:
                return EgfSeries.zero(self.truncation)
            return EgfSeries._raw({m: c * other for m, c in self._terms.items()}, self.truncation)
        n = min(self.truncation, other.truncation)
        a, b = self._by_weight(), other._by_weight()
        out: dict[Monomial, Fraction] = {}
        for wa in range(min(n, self.truncation) + 1):
            if not a[wa]:
                continue
            for wb in range(min(n - wa, other.truncation) + 1):
                if not b[wb]:
                    continue
                for ma, ca in a[wa]:
                    for mb, cb in b[wb]:
                        m = ma * mb
                        out[m] = out.get(m, 0) + ca * cb
        return EgfSeries._raw({m: c for m, c in out.items() if c}, n)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> EgfSeries:
        return self * (1 / Fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.truncation == other.truncation and self._terms == other._terms

    def __hash__(self):
        return hash((self.truncation, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*[{m}]" if m.exponents else f"({c})" for m, c in self) or "0"
        return f"EgfSeries({body}; weight<={self.truncation})"

    # -- transcendental functions of zero-constant series --

    def _taylor(self, parity: int | None) -> EgfSeries:
        # parity None: all powers; 0: even powers (cosh); 1: odd powers (sinh).
        if self.constant_term:
            raise ValueError("argument must have zero constant term")
        n = self.truncation
        total = EgfSeries.zero(n)
        power = EgfSeries.one(n)
        i = 0
        while not power.is_zero():
            if parity is None or i % 2 == parity:
                total = total + power / math.factorial(i)
            i += 1
            power = power * self
        return total

    def exp(self) -> EgfSeries:
        return self._taylor(None)

    def cosh(self) -> EgfSeries:
        return self._taylor(0)

    def sinh(self) -> EgfSeries:
        return self._taylor(1)

    # -- rendering --

    def to_text(self) -> str:
        """One line per monomial, ``<num>/<den> <l>^<e> ...``, graded-lex order."""
        lines = []
        for mono, coeff in self:
            head = f"{coeff.numerator}/{coeff.denominator}"
            lines.append(f"{head} {mono}" if mono.exponents else head)
        return "\n".join(lines)


def series_add(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    return a + b


def series_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    return a * b


def series_exp(a: EgfSeries) -> EgfSeries:
    return a.exp()


def series_cosh(a: EgfSeries) -> EgfSeries:
    return a.cosh()


def series_sinh(a: EgfSeries) -> EgfSeries:
    return a.sinh()


def egf_coefficient(s: EgfSeries, c: CycleType) -> Fraction:
    """Coefficient of ``prod t_l^{c_l} / prod c_l!`` in ``s``.

    Raises ``ValueError`` if ``c`` lies beyond the truncation, where the stored
    coefficient would be silently wrong.
    """
    if c.n > s.truncation:
        raise ValueError(f"cycle type of size {c.n} exceeds series truncation {s.truncation}")
    scale = 1
    for _, m in c.parts:
        scale *= math.factorial(m)
    return s.coefficient(Monomial.of_cycle_type(c)) * scale


def root_exponent(k: int, truncation: int, signed: bool = False) -> EgfSeries:
    """``sum_l sum_{g in G_k(l)} s * l^(g-1)/g * t_l^g`` with ``s = (-1)^(l*g+1)`` if signed."""
    if k < 1:
        raise ValueError("k must be positive")
    terms: dict[Monomial, Fraction] = {}
    for ell in range(1, truncation + 1):
        for g in g_set(k, ell):
            if g * ell > truncation:
                break
            coeff = Fraction(ell ** (g - 1), g)
            if signed and (ell * g + 1) % 2:
                coeff = -coeff
            terms[Monomial(((ell, g),))] = coeff
    return EgfSeries(terms, truncation)


def build_total_root_series(k: int, truncation: int) -> EgfSeries:
    """EGF whose coefficient at cycle type ``c`` counts the k-th roots."""
    return root_exponent(k, truncation).exp()


def build_signed_difference_series(k: int, truncation: int) -> EgfSeries:
    """EGF whose coefficient at ``c`` is (#even roots) - (#odd roots)."""
    return root_exponent(k, truncation, signed=True).exp()
