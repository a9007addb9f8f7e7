"""Independent reference implementations and frozen expected values.

The brute-force routines here deliberately avoid the algorithms under
test: partition counting is a quadratic coin-style DP instead of the
pentagonal recurrence, and cut-vertex detection deletes each vertex and
recounts components with a union-find instead of a lowlink DFS.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from nonsep.graphs import Multigraph
from nonsep.poly import Monomial

# The recurrence polynomials for indices 2..6, transcribed by hand as
# {exponent pairs -> coefficient}.  Exponent pairs are (variable index,
# exponent) sorted by index, e.g. ((2, 1), (3, 2)) is X2*X3^2.
GOLDEN_POLYS: dict[int, dict[tuple[tuple[int, int], ...], int]] = {
    2: {},
    3: {((2, 3),): -2},
    4: {((2, 1), (3, 2)): -12, ((2, 4),): 6},
    5: {
        ((2, 1), (4, 2)): -20,
        ((3, 2), (4, 1)): -30,
        ((2, 2), (3, 2)): 120,
        ((2, 5),): -24,
    },
    6: {
        ((2, 1), (5, 2)): -30,
        ((3, 1), (4, 1), (5, 1)): -120,
        ((2, 1), (3, 2), (4, 1)): 900,
        ((2, 2), (4, 2)): 300,
        ((4, 3),): -30,
        ((2, 3), (3, 2)): -1200,
        ((3, 4),): 210,
        ((2, 6),): 120,
    },
}


def golden_terms(n: int) -> dict[Monomial, int]:
    return {Monomial(exps): coeff for exps, coeff in GOLDEN_POLYS[n].items()}


def partition_count_dp(k: int) -> int:
    """Number of partitions of k by the textbook O(k^2) table."""
    table = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            table[total] += table[total - part]
    return table[k]


def _component_count(vertices: list[int], edges: list[tuple[int, int]]) -> int:
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in vertices})


def brute_cut_vertices(g: Multigraph) -> frozenset[int]:
    """Cut vertices straight from the definition: deleting the vertex and
    its edges increases the number of components."""
    all_vertices = list(range(g.vertex_count))
    base = _component_count(all_vertices, list(g.edges))
    cuts = set()
    for v in all_vertices:
        rest = [u for u in all_vertices if u != v]
        kept = [(a, b) for a, b in g.edges if v not in (a, b)]
        if _component_count(rest, kept) > base:
            cuts.add(v)
    return frozenset(cuts)


def brute_is_nonseparable(g: Multigraph) -> bool:
    connected = _component_count(list(range(g.vertex_count)), list(g.edges)) == 1
    return connected and not brute_cut_vertices(g)


def iter_multigraphs(max_vertices: int, max_edges: int) -> Iterator[Multigraph]:
    """Every loopless multigraph on 1..max_vertices labeled vertices with at
    most max_edges edges, isolated vertices included."""
    for r in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(r), 2))
        for k in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, k):
                yield Multigraph(r, combo)


def partitions_with_min_part(total: int, min_part: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing partitions of ``total`` with every part >= min_part."""

    def extend(prefix: tuple[int, ...], remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), min_part - 1, -1):
            yield from extend(prefix + (part,), remaining - part, part)

    yield from extend((), total, total)
