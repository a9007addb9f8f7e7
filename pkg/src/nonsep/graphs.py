"""Loopless multigraphs, cut-vertex detection, and certified realizations.

Vertices are 0-based integers internally; the JSON and DOT renderings are
1-based.  Parallel edges are allowed and tracked by identity, loops are
rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import DegreeSequence, hakimi_admissible


@dataclass(frozen=True, slots=True)
class Multigraph:
    """Vertex count plus a multiset of undirected edges (no loops)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if vertex_count < 1:
            raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
        normalized = []
        for edge in edges:
            u, v = edge
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {edge!r} outside vertex range 0..{vertex_count - 1}")
            normalized.append((min(u, v), max(u, v)))
        # Canonical edge order makes equality and rendering independent of
        # the order edges were supplied in.
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge id); parallel edges keep
        distinct ids so DFS can tell them apart."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj


def degree_sequence(g: Multigraph) -> DegreeSequence:
    """Edge-incidence count of every vertex, sorted non-increasing."""
    degrees = [0] * g.vertex_count
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    return tuple(sorted(degrees, reverse=True))


def is_connected(g: Multigraph) -> bool:
    seen = [False] * g.vertex_count
    stack = [0]
    seen[0] = True
    adj = g.adjacency()
    while stack:
        u = stack.pop()
        for w, _ in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def cut_vertices(g: Multigraph) -> frozenset[int]:
    """Vertices whose removal increases the component count.

    Graphs with fewer than 2 edges have no cut-vertices by convention.
    Lowlink DFS; the edge used to enter a vertex is skipped by id, so a
    parallel edge back to the DFS parent counts as a genuine back edge.
    """
    if len(g.edges) < 2:
        return frozenset()
    adj = g.adjacency()
    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    cuts: set[int] = set()
    clock = 0

    def visit(u: int, entry_edge: int) -> None:
        nonlocal clock
        disc[u] = low[u] = clock
        clock += 1
        children = 0
        for w, eid in adj[u]:
            if eid == entry_edge:
                continue
            if disc[w] == -1:
                children += 1
                visit(w, eid)
                low[u] = min(low[u], low[w])
                if entry_edge != -1 and low[w] >= disc[u]:
                    cuts.add(u)
            else:
                low[u] = min(low[u], disc[w])
        if entry_edge == -1 and children >= 2:
            cuts.add(u)

    for root in range(g.vertex_count):
        if disc[root] == -1:
            visit(root, -1)
    return frozenset(cuts)


def is_nonseparable(g: Multigraph) -> bool:
    """Connected with no cut-vertices.  The single-edge graph qualifies."""
    return is_connected(g) and not cut_vertices(g)


class InadmissibleSequenceError(ValueError):
    """Degree sequence admits no non-separable realization.

    ``reason`` is one of 'length', 'min_part', 'parity', 'inequality'.
    """

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True, slots=True)
class RealizationResult:
    graph: Multigraph
    certified: bool


def _check_admissible(parts: DegreeSequence) -> None:
    if len(parts) < 2:
        raise InadmissibleSequenceError("length", f"need at least 2 vertices, got {parts}")
    if parts[-1] < 2:
        raise InadmissibleSequenceError("min_part", f"every degree must be >= 2: {parts}")
    total = sum(parts)
    if total % 2:
        raise InadmissibleSequenceError("parity", f"degree sum {total} is odd: {parts}")
    bound = total - parts[0] - 2 * len(parts) + 4
    if parts[0] > bound:
        raise InadmissibleSequenceError(
            "inequality",
            f"largest degree {parts[0]} exceeds d_2+...+d_r - 2r + 4 = {bound}: {parts}",
        )


def realize_nonseparable(seq: Sequence[int]) -> RealizationResult:
    """Construct a non-separable multigraph with the given degree sequence.

    For two vertices the only admissible sequence is (a, a), realized by a
    parallel edges.  For r >= 3 vertices, lay down the cycle v_0..v_{r-1}
    (a non-separable skeleton consuming degree 2 everywhere), then pair off
    the residual degrees d_i - 2 by repeatedly joining the two vertices of
    largest residual.  Admissibility guarantees the largest residual never
    exceeds the sum of the others, so the pairing always completes, and
    adding edges to a non-separable graph keeps it non-separable.

    The result is re-checked against the requested sequence and for
    non-separability; ``certified`` records both checks passing.
    """
    parts = tuple(sorted(seq, reverse=True))
    _check_admissible(parts)
    r = len(parts)
    if r == 2:
        edges = [(0, 1)] * parts[0]
    else:
        edges = [(i, (i + 1) % r) for i in range(r)]
        residual = [d - 2 for d in parts]
        while True:
            order = sorted(range(r), key=lambda i: (-residual[i], i))
            a, b = order[0], order[1]
            if residual[a] == 0:
                break
            edges.append((a, b))
            residual[a] -= 1
            residual[b] -= 1
    graph = Multigraph(r, edges)
    certified = degree_sequence(graph) == parts and is_nonseparable(graph)
    return RealizationResult(graph=graph, certified=certified)


def to_json_dict(g: Multigraph) -> dict:
    """JSON form with 1-based vertex indices and lexicographically sorted
    edges."""
    return {
        "vertices": g.vertex_count,
        "edges": [[u + 1, v + 1] for u, v in g.edges],
    }


def to_dot(g: Multigraph) -> str:
    """Undirected DOT rendering, one line per edge instance."""
    lines = ["graph {"]
    isolated = set(range(g.vertex_count))
    for u, v in g.edges:
        isolated.discard(u)
        isolated.discard(v)
    for v in sorted(isolated):
        lines.append(f"  {v + 1};")
    for u, v in g.edges:
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines)
