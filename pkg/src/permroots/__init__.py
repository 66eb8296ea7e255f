"""Exact counts of even, odd and total k-th roots of permutations by cycle type."""

from .counting import RootCount, count_roots, has_kth_root, single_length_counts
from .cycletype import CycleType, format_cycle_type, parity_of_type, parse_cycle_type, partitions_of
from .gset import RootDivisorSet, g_set, g_set_by_definition, g_set_by_factorization
from .oracle import Permutation, oracle_count_roots
from .series import EgfSeries, build_signed_difference_series, build_total_root_series, egf_coefficient
from .sequences import SEQUENCES, generate_sequence, single_length_egf, single_length_egf_simplified, square_root_egf

__all__ = [
    "CycleType",
    "EgfSeries",
    "Permutation",
    "RootCount",
    "RootDivisorSet",
    "SEQUENCES",
    "build_signed_difference_series",
    "build_total_root_series",
    "count_roots",
    "egf_coefficient",
    "format_cycle_type",
    "g_set",
    "g_set_by_definition",
    "g_set_by_factorization",
    "generate_sequence",
    "has_kth_root",
    "oracle_count_roots",
    "parity_of_type",
    "parse_cycle_type",
    "partitions_of",
    "single_length_counts",
    "single_length_egf",
    "single_length_egf_simplified",
    "square_root_egf",
]
