"""Hamiltonicity and diagonal counts of grid graphs on the two-holed torus."""

from ._core import (
    DomainError,
    InconsistencyError,
    InputError,
    ResourceError,
    canonical_tree_string,
    cycle_count,
    diag_count,
    diag_distribution,
    diagonals,
    exceptional_pairs,
    is_hamiltonian,
    link_permutation,
    link_reduce,
    loop_count,
    orientation_link,
    segment_successor,
    square_construction,
    tree_string,
    witness,
)

__all__ = [
    "DomainError",
    "InconsistencyError",
    "InputError",
    "ResourceError",
    "canonical_tree_string",
    "cycle_count",
    "diag_count",
    "diag_distribution",
    "diagonals",
    "exceptional_pairs",
    "is_hamiltonian",
    "link_permutation",
    "link_reduce",
    "loop_count",
    "orientation_link",
    "segment_successor",
    "square_construction",
    "tree_string",
    "witness",
]
