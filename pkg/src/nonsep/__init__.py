"""Exact toolkit for a two-operator polynomial recurrence whose monomials
enumerate the degree sequences of non-separable multigraphs.
"""

from .graphs import (
    InadmissibleSequenceError,
    Multigraph,
    RealizationResult,
    cut_vertices,
    degree_sequence,
    is_connected,
    is_nonseparable,
    realize_nonseparable,
)
from .partitions import (
    dns_count,
    format_sequence,
    hakimi_admissible,
    nonseparable_sequences,
    parse_sequence,
    partition_count,
)
from .poly import (
    IntegralityError,
    Monomial,
    Polynomial,
    ResourceLimitError,
    augmented_poly,
    binomial,
    polynomial_from_json_terms,
    raise_pairs,
    recurrence_poly,
    source_poly,
    split_factors,
)
from .verify import run_suite, suite_passed

__version__ = "0.1.0"

__all__ = [
    "IntegralityError",
    "InadmissibleSequenceError",
    "Monomial",
    "Multigraph",
    "Polynomial",
    "RealizationResult",
    "ResourceLimitError",
    "augmented_poly",
    "binomial",
    "cut_vertices",
    "degree_sequence",
    "dns_count",
    "format_sequence",
    "hakimi_admissible",
    "is_connected",
    "is_nonseparable",
    "nonseparable_sequences",
    "parse_sequence",
    "partition_count",
    "polynomial_from_json_terms",
    "raise_pairs",
    "realize_nonseparable",
    "recurrence_poly",
    "run_suite",
    "source_poly",
    "split_factors",
    "suite_passed",
]
