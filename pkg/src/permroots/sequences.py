"""Single-length generating functions and their hyperbolic forms.

For a permutation whose cycles all have length ``l``, the even/odd root EGFs
in one variable ``t`` are

    1/2 exp(S(t)) +/- 1/2 exp(S_signed(t)),
    S(t) = sum_{g in G_k(l)} l^(g-1)/g t^g,

with ``S_signed`` carrying ``(-1)^(l*g+1)`` on each term. For even ``k`` these
collapse to cosh/sinh expressions, built here literally so the two forms can
be compared coefficient by coefficient.

The univariate series reuse :class:`EgfSeries` with the single variable
``t_1`` (weight 1), so truncation is the ordinary degree bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gset import g_set
from .series import EgfSeries

__all__ = [
    "EVEN",
    "ODD",
    "SequenceSpec",
    "SEQUENCES",
    "lookup_sequence",
    "single_length_egf",
    "single_length_egf_simplified",
    "square_root_egf",
    "generate_sequence",
    "sequence_from_egf",
    "bfile",
]

EVEN = "even"
ODD = "odd"


def _check_parity(parity: str) -> None:
    if parity not in (EVEN, ODD):
        raise ValueError(f"parity must be {EVEN!r} or {ODD!r}, got {parity!r}")


@dataclass(frozen=True)
class SequenceSpec:
    id: str
    k: int
    parity: str
    ell: int = 1
    offset: int = 0


# Offsets are 0 throughout: term c counts roots of the identity of S_c.
SEQUENCES: dict[str, SequenceSpec] = {
    s.id: s
    for s in [
        SequenceSpec("A000704", 2, EVEN),
        SequenceSpec("A001465", 2, ODD),
        SequenceSpec("A061129", 4, EVEN),
        SequenceSpec("A061136", 4, ODD),
        SequenceSpec("A061130", 6, EVEN),
        SequenceSpec("A061137", 6, ODD),
        SequenceSpec("A061131", 8, EVEN),
        SequenceSpec("A061132", 10, EVEN),
    ]
}


def lookup_sequence(seq_id: str) -> SequenceSpec:
    try:
        return SEQUENCES[seq_id.upper()]
    except KeyError:
        raise KeyError(f"unsupported sequence {seq_id!r}; supported: {', '.join(SEQUENCES)}") from None


def _t_sum(terms: dict[int, Fraction], truncation: int) -> EgfSeries:
    # sum of coeff * t^deg in the single variable t = t_1
    s = EgfSeries.zero(truncation)
    for deg, coeff in terms.items():
        s = s + EgfSeries.term(coeff, {1: deg}, truncation)
    return s


def _g_terms(k: int, ell: int, gs, truncation: int, signed: bool = False) -> dict[int, Fraction]:
    out = {}
    for g in gs:
        if g > truncation:
            continue
        coeff = Fraction(ell ** (g - 1), g)
        if signed and (ell * g + 1) % 2:
            coeff = -coeff
        out[g] = coeff
    return out


def single_length_egf(k: int, ell: int, parity: str, truncation: int) -> EgfSeries:
    """EGF in ``t`` of the even (or odd) k-th roots of type ``(l)^c``, by ``c``."""
    _check_parity(parity)
    gs = g_set(k, ell)
    plain = _t_sum(_g_terms(k, ell, gs, truncation), truncation).exp()
    signed = _t_sum(_g_terms(k, ell, gs, truncation, signed=True), truncation).exp()
    half = Fraction(1, 2)
    return half * plain + half * signed if parity == EVEN else half * plain - half * signed


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def single_length_egf_simplified(k: int, ell: int, parity: str, truncation: int) -> EgfSeries:
    """Same series as :func:`single_length_egf`, built from the hyperbolic forms.

    Even ``k`` dispatches on ``l``:

    * ``l == 1`` and ``k = 2^m``: ``exp(x) cosh|sinh(x^2/2 + ... + x^(2^m)/2^m)``
    * ``l == 1``: ``exp(sum_{g|k, g odd} t^g/g) cosh|sinh(sum_{g|k, g even} t^g/g)``
    * odd ``l``: ``exp(S over odd members) cosh|sinh(S over even members)``
    * even ``l``: ``cosh|sinh(S)``; every member of ``G_k(l)`` is even.

    Odd ``k`` has no simplification: every root shares the parity of the
    permutation, so the total series is split by the sign of ``(l)^c``.
    """
    _check_parity(parity)
    N = truncation
    hyper = EgfSeries.cosh if parity == EVEN else EgfSeries.sinh

    if k % 2:
        total = _t_sum(_g_terms(k, ell, g_set(k, ell), N), N).exp()
        # (l)^c is odd exactly when l is even and c is odd.
        keep = {}
        for mono, coeff in total:
            c = mono.exponents[0][1] if mono.exponents else 0
            sigma_even = ell % 2 == 1 or c % 2 == 0
            if sigma_even == (parity == EVEN):
                keep[mono] = coeff
        return EgfSeries(keep, N)

    if ell == 1 and _is_power_of_two(k):
        m = k.bit_length() - 1
        x = EgfSeries.variable(1, N)
        inner = _t_sum({2**i: Fraction(1, 2**i) for i in range(1, m + 1) if 2**i <= N}, N)
        return x.exp() * hyper(inner)

    if ell == 1:
        divisors = [g for g in range(1, k + 1) if k % g == 0 and g <= N]
        odd_part = _t_sum({g: Fraction(1, g) for g in divisors if g % 2}, N)
        even_part = _t_sum({g: Fraction(1, g) for g in divisors if g % 2 == 0}, N)
        return odd_part.exp() * hyper(even_part)

    gs = g_set(k, ell)
    if ell % 2:
        go = _t_sum(_g_terms(k, ell, gs.go, N), N)
        ge = _t_sum(_g_terms(k, ell, gs.ge, N), N)
        return go.exp() * hyper(ge)

    assert not gs.go, "G_k(l) has only even members for even k and even l"
    return hyper(_t_sum(_g_terms(k, ell, gs, N), N))


def square_root_egf(parity: str, truncation: int) -> EgfSeries:
    """Multivariate EGF of even (or odd) square roots, in product form::

        prod_j exp(t_{2j-1}) * cosh|sinh( sum_j ((2j-1)/2 t_{2j-1}^2 + j t_{2j}^2) )
    """
    _check_parity(parity)
    N = truncation
    prefactor = EgfSeries.one(N)
    inner = EgfSeries.zero(N)
    for j in range(1, N // 2 + 2):
        odd_len, even_len = 2 * j - 1, 2 * j
        if odd_len <= N:
            prefactor = prefactor * EgfSeries.variable(odd_len, N).exp()
            inner = inner + EgfSeries.term(Fraction(odd_len, 2), {odd_len: 2}, N)
        if 2 * even_len <= N:
            inner = inner + EgfSeries.term(j, {even_len: 2}, N)
    return prefactor * (inner.cosh() if parity == EVEN else inner.sinh())


def sequence_from_egf(series: EgfSeries, terms: int) -> list[int]:
    """``c! * [t^c] series`` for ``c = 0..terms-1``; each must be an integer."""
    out = []
    for c in range(terms):
        value = series.coefficient({1: c}) * math.factorial(c)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral EGF coefficient {value} at index {c}")
        out.append(int(value))
    return out


def generate_sequence(spec: SequenceSpec | str, terms: int) -> list[int]:
    """First ``terms`` values of a supported sequence, starting at index 0."""
    if isinstance(spec, str):
        spec = lookup_sequence(spec)
    if terms < 1:
        raise ValueError("terms must be at least 1")
    return sequence_from_egf(single_length_egf(spec.k, spec.ell, spec.parity, terms - 1), terms)


def bfile(values: list[int], offset: int = 0) -> str:
    """OEIS b-file text: one ``<index> <value>`` line per term."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))
