"""Germ-order arithmetic for distance-avoiding subsets of the naturals.

Compares eventually periodic subsets of N by the germs at q -> 1- of their
generating functions, and searches for / certifies the avoiding set that
dominates all others for a given finite set of forbidden distances.
"""

from .germs import (
    EQUAL,
    GREATER,
    LESS,
    ORDER_NAMES,
    IntPolynomial,
    LaurentPrefix,
    RationalGF,
    germ_compare,
    germ_gap,
    laurent_prefix,
    one_minus_power,
    poly_germ_compare,
    poly_sign_near_one,
)
from .local import (
    PatchContext,
    best_patch,
    improve_at,
    sweep_to_fixpoint,
    winner_windows_consistent,
)
from .oracle import brute_best, brute_best_periodic, enumerate_avoiding
from .search import (
    CERTIFICATE_KINDS,
    REPEATABLE_WINDOW,
    SYMMETRIC_OFFSET,
    TWO_BLOCK_INDUCTION,
    Certificate,
    DpTable,
    SearchBudget,
    SearchResult,
    best_string,
    certify_two_block,
    dp_start,
    dp_step,
    find_repeatable_winner,
    find_winner,
    is_repeatable,
    symmetric_winner,
    symmetry_offset,
)
from .sets import (
    DistanceSet,
    RationalSet,
    Valuation,
    generating_function,
    greedy_avoiding,
    is_avoiding,
    normalize,
    set_compare,
    shift,
    valuation,
)
from .words import (
    CircularWord,
    Letter,
    block_encode,
    circular_compare,
    circular_concat,
    circular_decompose,
    default_block_length,
    is_legal,
    is_successor,
)

__all__ = [
    "LESS",
    "EQUAL",
    "GREATER",
    "ORDER_NAMES",
    "IntPolynomial",
    "RationalGF",
    "LaurentPrefix",
    "poly_sign_near_one",
    "poly_germ_compare",
    "germ_compare",
    "germ_gap",
    "laurent_prefix",
    "one_minus_power",
    "DistanceSet",
    "RationalSet",
    "Valuation",
    "normalize",
    "generating_function",
    "is_avoiding",
    "greedy_avoiding",
    "shift",
    "valuation",
    "set_compare",
    "Letter",
    "CircularWord",
    "default_block_length",
    "block_encode",
    "is_legal",
    "is_successor",
    "circular_concat",
    "circular_compare",
    "circular_decompose",
    "DpTable",
    "dp_start",
    "dp_step",
    "best_string",
    "is_repeatable",
    "find_repeatable_winner",
    "symmetry_offset",
    "symmetric_winner",
    "certify_two_block",
    "find_winner",
    "Certificate",
    "SearchBudget",
    "SearchResult",
    "REPEATABLE_WINDOW",
    "SYMMETRIC_OFFSET",
    "TWO_BLOCK_INDUCTION",
    "CERTIFICATE_KINDS",
    "PatchContext",
    "best_patch",
    "improve_at",
    "sweep_to_fixpoint",
    "winner_windows_consistent",
    "enumerate_avoiding",
    "brute_best",
    "brute_best_periodic",
]

__version__ = "0.1.0"
