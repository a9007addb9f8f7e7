"""Cross-checks tying the polynomial recurrence to the degree sequence side.

Five named checks are available per index n:

* ``support``   - monomial support of the n-th polynomial equals the set of
  admissible degree sequences of sum 2n (length >= 3),
* ``count``     - term count equals dns_count(2n) - 1 (the -1 is the single
  length-2 sequence (n, n), which the polynomial never carries),
* ``recursion`` - the admissible sequences at level n are exactly the union
  of the one-step operator images of the level n-1 sequences, with the two
  images disjoint for every source sequence,
* ``coeff``     - the coefficient of the all-twos monomial X_2^n equals
  (-1)^n (n-1)!,
* ``realize``   - every admissible sequence has a certified non-separable
  realization (capped by default at n = 12).

Checks for distinct n are independent; reports list n in increasing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .graphs import degree_sequence as graph_degree_sequence
from .graphs import realize_nonseparable
from .partitions import DegreeSequence, dns_count, nonseparable_sequences
from .poly import (
    Monomial,
    Polynomial,
    ResourceLimitError,
    raise_pairs,
    recurrence_poly,
    source_poly,
    split_factors,
)

ALL_CHECKS = ("support", "count", "recursion", "coeff", "realize")
REALIZE_DEFAULT_MAX_N = 12

# Seed for the recursion check at level 2: the square term X_2^2 of the
# augmented polynomial stands in for the empty level-2 polynomial, so the
# level-2 source set is the single sequence (2, 2).
BASE_SEQUENCES: tuple[DegreeSequence, ...] = ((2, 2),)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: dict


@dataclass
class VerificationReport:
    n: int
    checks: dict[str, CheckResult] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks.values())

    def as_json_dict(self) -> dict:
        out: dict = {"n": self.n, "checks": {}}
        for name in ALL_CHECKS:
            if name in self.checks:
                result = self.checks[name]
                out["checks"][name] = {"passed": result.passed, "detail": result.detail}
        if self.error is not None:
            out["error"] = self.error
        return out


class ImageSets(NamedTuple):
    raised: frozenset[DegreeSequence]
    split: frozenset[DegreeSequence]


def image_sets(alpha: Sequence[int]) -> ImageSets:
    """Degree-sequence supports of the two operators applied to X_alpha."""
    parts = tuple(alpha)
    if not parts or parts[-1] < 2 or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"sequence must be non-empty, non-increasing, entries >= 2: {parts}")
    single = Polynomial({Monomial.from_sequence(parts): 1})
    return ImageSets(
        raised=raise_pairs(single).support(),
        split=split_factors(single).support(),
    )


def _seq_list(seqs: Iterable[DegreeSequence]) -> list[list[int]]:
    return [list(s) for s in sorted(seqs, reverse=True)]


def check_support(n: int) -> CheckResult:
    """Monomial support of the polynomial vs. the enumerated sequences."""
    actual = recurrence_poly(n).support()
    expected = frozenset(nonseparable_sequences(n))
    missing = expected - actual
    extra = actual - expected
    return CheckResult(
        passed=not missing and not extra,
        detail={
            "support_size": len(actual),
            "enumeration_size": len(expected),
            "missing": _seq_list(missing),
            "extra": _seq_list(extra),
        },
    )


def check_term_count(n: int) -> CheckResult:
    actual = len(recurrence_poly(n))
    expected = dns_count(2 * n) - 1
    return CheckResult(passed=actual == expected, detail={"actual": actual, "expected": expected})


def check_recursion_cover(n: int, strict: bool = False) -> CheckResult:
    """One recurrence step on the sequence side: images of level n cover
    exactly level n+1.

    Per source sequence the two operator images must be disjoint.  Level 2
    uses the seed (2, 2); only there can images of length 2 arise, and they
    are dropped before comparing.  With ``strict`` set, additionally checks
    that the source term's monomials are already covered by the images and
    that the constructive witness of :func:`cover_witness` is valid for
    every target sequence.
    """
    if n < 2:
        raise ValueError(f"recursion check requires n >= 2, got {n}")
    sources = BASE_SEQUENCES if n == 2 else tuple(nonseparable_sequences(n))
    covered: set[DegreeSequence] = set()
    overlaps: list[dict] = []
    for alpha in sources:
        images = image_sets(alpha)
        common = images.raised & images.split
        if common:
            overlaps.append({"alpha": list(alpha), "common": _seq_list(common)})
        covered |= images.raised
        covered |= images.split
    if n == 2:
        covered = {s for s in covered if len(s) >= 3}
    expected = frozenset(nonseparable_sequences(n + 1))
    missing = expected - covered
    extra = covered - expected
    detail = {
        "from_n": n,
        "source_count": len(sources),
        "covered_count": len(covered),
        "target_count": len(expected),
        "missing": _seq_list(missing),
        "extra": _seq_list(extra),
        "overlapping": overlaps,
    }
    passed = not missing and not extra and not overlaps
    if strict:
        uncovered_source = source_support(n) - frozenset(covered)
        bad_witness = []
        for d in expected:
            alpha = cover_witness(d)
            images = image_sets(alpha)
            alpha_ok = alpha in sources
            if not (alpha_ok and d in (images.raised | images.split)):
                bad_witness.append(list(d))
        detail["source_terms_uncovered"] = _seq_list(uncovered_source)
        detail["bad_witness"] = sorted(bad_witness, reverse=True)
        passed = passed and not uncovered_source and not bad_witness
    return CheckResult(passed=passed, detail=detail)


def source_support(n: int) -> frozenset[DegreeSequence]:
    return source_poly(n).support()


def cover_witness(d: Sequence[int]) -> DegreeSequence:
    """A level-(n-1) sequence whose operator images contain ``d``.

    All-twos sequences come from the one-shorter all-twos sequence via the
    split operator; anything else from decrementing its two largest entries
    (both are >= 3 for an admissible non-all-twos sequence) via the raising
    operator.
    """
    parts = tuple(sorted(d, reverse=True))
    if all(p == 2 for p in parts):
        return parts[1:]
    return tuple(sorted((parts[0] - 1, parts[1] - 1) + parts[2:], reverse=True))


def check_all_twos_coefficient(n: int) -> CheckResult:
    """Coefficient of X_2^n: alternating factorial (-1)^n (n-1)!."""
    actual = recurrence_poly(n).coefficient(Monomial.single(2, n))
    expected = (-1) ** n * math.factorial(n - 1)
    return CheckResult(
        passed=actual == expected,
        detail={"actual": str(actual), "expected": str(expected)},
    )


def check_realizations(n: int) -> CheckResult:
    failures: list[dict] = []
    seqs = nonseparable_sequences(n)
    for seq in seqs:
        result = realize_nonseparable(seq)
        if not result.certified or graph_degree_sequence(result.graph) != seq:
            failures.append({"sequence": list(seq)})
    return CheckResult(
        passed=not failures,
        detail={"sequence_count": len(seqs), "failures": failures},
    )


def run_suite(
    max_n: int,
    checks: Iterable[str] | None = None,
    realize_max_n: int = REALIZE_DEFAULT_MAX_N,
) -> list[VerificationReport]:
    """Run the selected checks for every n in 3..max_n.

    The ``recursion`` entry of report n certifies the cover of level n from
    level n-1 (so the base seed is exercised at n = 3).  The ``realize``
    check is skipped above ``realize_max_n`` and then absent from the
    report.  A resource failure at some n is recorded on that report and
    does not discard earlier ones.
    """
    if max_n < 3:
        raise ValueError(f"max_n must be >= 3, got {max_n}")
    selected = tuple(checks) if checks is not None else ALL_CHECKS
    unknown = [c for c in selected if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; available: {list(ALL_CHECKS)}")
    reports: list[VerificationReport] = []
    for n in range(3, max_n + 1):
        report = VerificationReport(n=n)
        try:
            if "support" in selected:
                report.checks["support"] = check_support(n)
            if "count" in selected:
                report.checks["count"] = check_term_count(n)
            if "recursion" in selected:
                report.checks["recursion"] = check_recursion_cover(n - 1)
            if "coeff" in selected:
                report.checks["coeff"] = check_all_twos_coefficient(n)
            if "realize" in selected and n <= realize_max_n:
                report.checks["realize"] = check_realizations(n)
        except (ResourceLimitError, MemoryError) as exc:
            report.error = str(exc)
        reports.append(report)
    return reports


def suite_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


def reports_to_json(reports: Iterable[VerificationReport]) -> list[dict]:
    return [r.as_json_dict() for r in reports]


def render_table(reports: Sequence[VerificationReport]) -> str:
    """Fixed-width pass/fail table, one row per n."""
    names = [c for c in ALL_CHECKS if any(c in r.checks for r in reports)]
    widths = {c: max(len(c), 4) for c in names}
    n_width = max([len("n")] + [len(str(r.n)) for r in reports])
    header = "  ".join(["n".rjust(n_width)] + [c.rjust(widths[c]) for c in names])
    rows = [header]
    for r in reports:
        cells = [str(r.n).rjust(n_width)]
        for c in names:
            if c in r.checks:
                cell = "pass" if r.checks[c].passed else "FAIL"
            elif r.error is not None:
                cell = "err"
            else:
                cell = "-"
            cells.append(cell.rjust(widths[c]))
        rows.append("  ".join(cells))
    for r in reports:
        if r.error is not None:
            rows.append(f"error at n = {r.n}: {r.error}")
    ok = suite_passed(reports)
    failed = sum(1 for r in reports if not r.passed)
    summary = (
        f"all checks passed for n = {reports[0].n}..{reports[-1].n}"
        if ok
        else f"{failed} of {len(reports)} indices failed"
    )
    rows.append(summary)
    return "\n".join(rows)
