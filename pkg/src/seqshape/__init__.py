"""Bijective length-increasing sequence shaping.

A shaping function maps every sequence of length N over a finite alphabet to
a distinct sequence of length N+K over the same alphabet, restricting the
longer space to a structured subset.  This package provides the transforms,
bit-exact empirical information measurement, an exhaustive small-space
oracle, seeded skewed sources, and a reproducible Monte Carlo harness,
plus the ``sst`` command line on top of them.
"""

from .entropy import (
    Histogram,
    Sequence,
    entropy_length_product,
    entropy_length_product_from_counts,
    histogram,
    info_from_sorted_counts,
)
from .harness import (
    ExperimentSummary,
    RoundTripError,
    TABLE1_GRID,
    TABLE1_REFERENCE,
    TrialRecord,
    export,
    format_table1_comparison,
    record_to_dict,
    run_experiment,
    summary_to_dict,
    sweep_table1,
)
from .oracle import (
    OracleReport,
    SpaceDescriptor,
    ValidationReport,
    oracle_report,
    sorted_space,
    space_descriptor,
    validate_strategy,
)
from .rankcodec import (
    DigitStream,
    RankState,
    from_digits,
    rank_of_symbol,
    symbol_of_rank,
    to_digits,
)
from .seqio import format_sequence, parse_sequence, read_sequence, write_sequence
from .shaping import (
    ADAPTIVE_RANK,
    DEFAULT_MAX_SPACE,
    EXACT_SORTED,
    NotInImageError,
    ShaperConfig,
    ShapingOutcome,
    SpaceTooLargeError,
    STRATEGIES,
    inverse_adaptive,
    inverse_exact_sorted,
    inverse_transform,
    is_in_image,
    shape_and_measure,
    transform,
    transform_adaptive,
    transform_exact_sorted,
)
from .sources import SourceSpec, probabilities, sample, trial_rng

__version__ = "0.1.0"

__all__ = [
    "ADAPTIVE_RANK",
    "DEFAULT_MAX_SPACE",
    "DigitStream",
    "EXACT_SORTED",
    "ExperimentSummary",
    "Histogram",
    "NotInImageError",
    "OracleReport",
    "RankState",
    "RoundTripError",
    "STRATEGIES",
    "Sequence",
    "ShaperConfig",
    "ShapingOutcome",
    "SourceSpec",
    "SpaceDescriptor",
    "SpaceTooLargeError",
    "TABLE1_GRID",
    "TABLE1_REFERENCE",
    "TrialRecord",
    "ValidationReport",
    "entropy_length_product",
    "entropy_length_product_from_counts",
    "export",
    "format_sequence",
    "format_table1_comparison",
    "from_digits",
    "histogram",
    "info_from_sorted_counts",
    "inverse_adaptive",
    "inverse_exact_sorted",
    "inverse_transform",
    "is_in_image",
    "oracle_report",
    "parse_sequence",
    "probabilities",
    "rank_of_symbol",
    "read_sequence",
    "record_to_dict",
    "run_experiment",
    "sample",
    "shape_and_measure",
    "sorted_space",
    "space_descriptor",
    "summary_to_dict",
    "sweep_table1",
    "symbol_of_rank",
    "to_digits",
    "transform",
    "transform_adaptive",
    "transform_exact_sorted",
    "trial_rng",
    "validate_strategy",
    "write_sequence",
]
