"""Exact sparse multivariate polynomials and the two-operator recurrence.

A monomial is a product of variables X_2, X_3, ... (index 1 is never used)
and is stored as a sorted tuple of (index, exponent) pairs.  A polynomial
maps monomials to arbitrary-precision signed integer coefficients; zero
coefficients are never stored, so two polynomials are equal iff their term
maps are equal.

The polynomial family computed by :func:`recurrence_poly` starts from the
zero polynomial at index 2 and advances by

    P(n+1) = source_poly(n) + raise_pairs(P(n)) + split_factors(P(n))

where ``raise_pairs`` increments the indices of every unordered pair of
factor positions and ``split_factors`` replaces one factor X_v at a time
by a binomially weighted pair X_{1+l} * X_{1+v-l}.  Both operators raise
the weighted degree (sum of index times exponent) by exactly 2, so every
monomial of P(n) has weighted degree 2n, variable indices in [2, n-1], and
at least 3 factors.

The split operator carries a global factor of -1/2.  To stay in integer
arithmetic it aggregates doubled coefficients and halves at the end; the
aggregate is always even because the split weights pair up symmetrically,
and :class:`IntegralityError` is raised if that ever fails.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

DegreeSequence = tuple[int, ...]

# Term counts grow like the partition function; past this index the table
# cannot realistically be held in memory, so refuse up front.
HARD_INDEX_LIMIT = 50


class ResourceLimitError(RuntimeError):
    """Requested polynomial index is beyond the supported range."""


class IntegralityError(ArithmeticError):
    """A doubled coefficient aggregate of the split operator was odd."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, slots=True)
class Monomial:
    """Product of variables X_i, i >= 2, as sorted (index, exponent) pairs."""

    exps: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 1
        for idx, exp in self.exps:
            if idx <= prev:
                raise ValueError(f"indices must be >= 2 and strictly increasing: {self.exps}")
            if exp < 1:
                raise ValueError(f"exponents must be >= 1: {self.exps}")
            prev = idx

    @classmethod
    def from_map(cls, exponents: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((int(i), int(e)) for i, e in exponents.items() if e)))

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Monomial":
        """Build the monomial whose factors are the entries of ``seq``."""
        counts: dict[int, int] = defaultdict(int)
        for part in seq:
            counts[part] += 1
        return cls.from_map(counts)

    @classmethod
    def single(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls(((index, exponent),))

    def exponent_map(self) -> dict[int, int]:
        return dict(self.exps)

    def weighted_degree(self) -> int:
        return sum(i * e for i, e in self.exps)

    def factor_count(self) -> int:
        return sum(e for _, e in self.exps)

    def degree_sequence(self) -> DegreeSequence:
        """Non-increasing sequence repeating each index by its exponent."""
        out: list[int] = []
        for idx, exp in reversed(self.exps):
            out.extend([idx] * exp)
        return tuple(out)

    def text(self) -> str:
        return "*".join(f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in self.exps)

    def __str__(self) -> str:
        return self.text()


class Polynomial:
    """Immutable map from :class:`Monomial` to nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        cleaned: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    raise TypeError(f"polynomial keys must be Monomial, got {type(mono).__name__}")
                if coeff:
                    cleaned[mono] = int(coeff)
        self._terms = cleaned

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = merged.get(mono, 0) + coeff
            if total:
                merged[mono] = total
            else:
                merged.pop(mono, None)
        out = Polynomial()
        out._terms = merged
        return out

    def scaled(self, factor: int) -> "Polynomial":
        out = Polynomial()
        if factor:
            out._terms = {m: c * factor for m, c in self._terms.items()}
        return out

    def support(self) -> frozenset[DegreeSequence]:
        """Degree sequences of all monomials with nonzero coefficient."""
        return frozenset(m.degree_sequence() for m in self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending lexicographic order of their degree sequences."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].degree_sequence(), reverse=True)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            mag = abs(coeff)
            body = mono.text() if mag == 1 else f"{mag}*{mono.text()}"
            if i == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(chunks)

    def to_json_terms(self) -> list[dict]:
        """JSON-ready term list; coefficients as decimal strings."""
        out = []
        for mono, coeff in self.sorted_terms():
            out.append({"exponents": {str(i): e for i, e in mono.exps}, "coeff": str(coeff)})
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def polynomial_from_json_terms(data: Iterable[Mapping]) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_json_terms`; duplicate terms merge."""
    acc: dict[Monomial, int] = defaultdict(int)
    for obj in data:
        mono = Monomial.from_map({int(i): int(e) for i, e in obj["exponents"].items()})
        acc[mono] += int(obj["coeff"])
    return Polynomial(acc)


def _shifted(mono: Monomial, deltas: Mapping[int, int]) -> Monomial:
    exps = dict(mono.exps)
    for idx, delta in deltas.items():
        if not delta:
            continue
        e = exps.get(idx, 0) + delta
        if e:
            exps[idx] = e
        else:
            del exps[idx]
    return Monomial.from_map(exps)


def raise_pairs(p: Polynomial) -> Polynomial:
    """Sum over unordered pairs of factor positions, incrementing both indices.

    A factor X_v with exponent e contributes e positions, so a pair of
    positions holding the same variable counts e*(e-1)/2 times.  Each output
    monomial has weighted degree raised by 2 and the same factor count.
    """
    acc: dict[Monomial, int] = defaultdict(int)
    for mono, coeff in p:
        items = mono.exps
        for i, (v, e) in enumerate(items):
            if e >= 2:
                ways = e * (e - 1) // 2
                acc[_shifted(mono, {v: -2, v + 1: 2})] += coeff * ways
            for j in range(i + 1, len(items)):
                w, f = items[j]
                deltas: dict[int, int] = defaultdict(int)
                deltas[v] -= 1
                deltas[w] -= 1
                deltas[v + 1] += 1
                deltas[w + 1] += 1
                acc[_shifted(mono, deltas)] += coeff * e * f
    return Polynomial(acc)


def split_factors(p: Polynomial) -> Polynomial:
    """Replace one factor X_v at a time by the pair X_{1+l} * X_{1+v-l}.

    Each replacement is weighted by -C(v, l)/2 for l = 1..v-1.  Aggregation
    runs on doubled coefficients so the -1/2 factor never leaves integer
    arithmetic; every aggregate must come out even (the l and v-l terms
    produce the same monomial, and the central C(v, v/2) is itself even).
    Output monomials gain one factor and 2 units of weighted degree.
    """
    doubled: dict[Monomial, int] = defaultdict(int)
    for mono, coeff in p:
        for v, e in mono.exps:
            for l in range(1, v):
                deltas: dict[int, int] = defaultdict(int)
                deltas[v] -= 1
                deltas[1 + l] += 1
                deltas[1 + v - l] += 1
                doubled[_shifted(mono, deltas)] += -binomial(v, l) * e * coeff
    halved: dict[Monomial, int] = {}
    for mono, twice in doubled.items():
        if twice % 2:
            raise IntegralityError(f"odd doubled coefficient {twice} at {mono}")
        if twice:
            halved[mono] = twice // 2
    return Polynomial(halved)


def source_poly(n: int) -> Polynomial:
    """Inhomogeneous source term of the recurrence step n -> n+1.

    The sum -sum_{k=1..n-1} C(n, k) X_{1+k} X_{1+n-k} X_n, with the k and
    n-k contributions landing on the same monomial and merged.
    """
    if n < 2:
        raise ValueError(f"source term requires n >= 2, got {n}")
    acc: dict[Monomial, int] = defaultdict(int)
    for k in range(1, n):
        mono = Monomial.from_sequence((1 + k, 1 + n - k, n))
        acc[mono] -= binomial(n, k)
    return Polynomial(acc)


_ZERO = Polynomial()
_cache: dict[int, Polynomial] = {2: _ZERO}


def recurrence_poly(n: int) -> Polynomial:
    """The n-th polynomial of the recurrence; index 2 is the zero polynomial.

    Results for indices 2..n are memoized, so sweeping over n costs one
    recurrence step per new index.  Returned values are immutable and safe
    to share across threads.
    """
    if n < 2:
        raise ValueError(f"polynomial index must be >= 2, got {n}")
    if n > HARD_INDEX_LIMIT:
        raise ResourceLimitError(
            f"index {n} exceeds limit {HARD_INDEX_LIMIT}; "
            "term count grows like the partition function"
        )
    top = max(_cache)
    for m in range(top, n):
        prev = _cache[m]
        _cache[m + 1] = source_poly(m) + raise_pairs(prev) + split_factors(prev)
    return _cache[n]


def augmented_poly(n: int) -> Polynomial:
    """recurrence_poly(n) plus the square term X_n^2 with coefficient 1."""
    return recurrence_poly(n) + Polynomial({Monomial.single(n, 2): 1})
