"""Integer partition counting and non-separable degree sequence enumeration.

A degree sequence is kept as a non-increasing tuple of integers.  The
sequences enumerated here are exactly those with at least 3 entries, all
entries >= 2 and degree sum 2n, that pass Hakimi's admissibility test,
i.e. the degree sequences of non-separable multigraphs with n edges and
at least 3 vertices.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Sequence

DegreeSequence = tuple[int, ...]

_pcache = [1]  # partition numbers p(0), p(1), ...
_plock = threading.Lock()


def partition_count(k: int) -> int:
    """Number of unrestricted integer partitions of k (p(0) = 1).

    Filled by Euler's pentagonal-number recurrence with a memo table, so a
    sweep over k is linear in recurrence terms.
    """
    if k < 0:
        raise ValueError(f"partition argument must be >= 0, got {k}")
    if k < len(_pcache):
        return _pcache[k]
    with _plock:
        while len(_pcache) <= k:
            m = len(_pcache)
            total = 0
            j = 1
            while True:
                g = j * (3 * j - 1) // 2
                if g > m:
                    break
                sign = -1 if j % 2 == 0 else 1
                total += sign * _pcache[m - g]
                g2 = g + j
                if g2 <= m:
                    total += sign * _pcache[m - g2]
                j += 1
            _pcache.append(total)
    return _pcache[k]


def dns_count(degree_sum: int) -> int:
    """Count of degree sequences of the given even sum with a non-separable
    multigraph realization, including the single length-2 sequence.

    Closed form through the partition function:
    p(2m) - p(2m-1) - sum_{j=0}^{m-2} p(j) for degree_sum = 2m, m >= 2.
    """
    if degree_sum < 4 or degree_sum % 2:
        raise ValueError(f"degree sum must be even and >= 4, got {degree_sum}")
    m = degree_sum // 2
    return (
        partition_count(2 * m)
        - partition_count(2 * m - 1)
        - sum(partition_count(j) for j in range(m - 1))
    )


def hakimi_admissible(seq: Sequence[int]) -> bool:
    """Whether a non-separable multigraph with this degree sequence exists.

    True iff the sequence has at least 2 entries, all >= 2, even sum, and
    the largest entry d_1 satisfies d_1 <= d_2 + ... + d_r - 2r + 4.
    Sequences with fewer than 2 entries or an entry below 2 are rejected
    outright; input order does not matter.
    """
    parts = sorted(seq, reverse=True)
    if len(parts) < 2 or parts[-1] < 2:
        return False
    total = sum(parts)
    if total % 2:
        return False
    return parts[0] <= total - parts[0] - 2 * len(parts) + 4


@lru_cache(maxsize=None)
def _sequences(n: int) -> tuple[DegreeSequence, ...]:
    # Parts are capped at n - 1: the admissibility inequality plus degree
    # sum 2n forces d_1 <= n - r + 2 <= n - 1 once r >= 3.
    found: list[DegreeSequence] = []
    target = 2 * n
    cap = n - 1

    def extend(prefix: list[int], remaining: int, max_part: int) -> None:
        if remaining == 0:
            if len(prefix) >= 3 and hakimi_admissible(prefix):
                found.append(tuple(prefix))
            return
        for part in range(min(max_part, remaining), 1, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], target, cap)
    return tuple(found)


def nonseparable_sequences(n: int) -> list[DegreeSequence]:
    """All admissible degree sequences of length >= 3 and sum 2n, in
    descending lexicographic order."""
    if n < 2:
        raise ValueError(f"edge count must be >= 2, got {n}")
    return list(_sequences(n))


def format_sequence(seq: Iterable[int]) -> str:
    """Comma-separated textual form, e.g. '3,3,2'."""
    return ",".join(str(p) for p in seq)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse a comma-separated degree sequence; rejects empty or non-integer
    entries, and normalizes to non-increasing order."""
    try:
        parts = [int(chunk) for chunk in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"invalid degree sequence {text!r}") from exc
    return tuple(sorted(parts, reverse=True))
