"""Pseudo-codeword constructions and fundamental-cone analysis."""

from ._core import (
    absdet_vector,
    all_subsets,
    awgnc_pseudoweight,
    canonical_completion,
    count_perfect_matchings,
    det_vector,
    dumbbell,
    example_h422,
    girth,
    has_four_cycle,
    is_minimal_pcw,
    is_unscaled_pcw,
    parse_alist,
    parse_dense,
    perm_vector,
    random_regular_ldpc,
    remove_four_cycles,
    verify_gaussian_limit,
    verify_signed_completion,
    write_alist,
    write_dense,
    z_syndrome,
)

__all__ = [
    "absdet_vector",
    "all_subsets",
    "awgnc_pseudoweight",
    "canonical_completion",
    "count_perfect_matchings",
    "det_vector",
    "dumbbell",
    "example_h422",
    "girth",
    "has_four_cycle",
    "is_minimal_pcw",
    "is_unscaled_pcw",
    "parse_alist",
    "parse_dense",
    "perm_vector",
    "random_regular_ldpc",
    "remove_four_cycles",
    "verify_gaussian_limit",
    "verify_signed_completion",
    "write_alist",
    "write_dense",
    "z_syndrome",
]
