"""
Exact computations in the two models of the irreducible representation of
the symmetric group on 2n letters labeled by the 2 x n rectangle: the
polytabloid model built from tableaux and the web model built from
noncrossing perfect matchings.  The package constructs both bases,
computes the transition matrix between them by resolving crossings with
the minor syzygy, and verifies exactly -- in integer arithmetic, with an
independent intertwiner computation as a cross-check -- that the matrix
is unitriangular with nonnegative integer entries.
"""

from .combinat import (
    Matching,
    Permutation,
    Tableau,
    catalan,
    consecutive_matching,
    crossing_pairs,
    enumerate_perfect_matchings,
    enumerate_syt,
    enumerate_webs,
    interleaved_tableau,
    permutation_from_tableaux,
    permute_matching,
    tableau_to_web,
)
from .transition import (
    TransitionMatrix,
    VerificationReport,
    intertwiner_oracle,
    transition_matrix,
    transition_row,
    verify,
)

__all__ = [
    "Matching",
    "Permutation",
    "Tableau",
    "TransitionMatrix",
    "VerificationReport",
    "catalan",
    "consecutive_matching",
    "crossing_pairs",
    "enumerate_perfect_matchings",
    "enumerate_syt",
    "enumerate_webs",
    "interleaved_tableau",
    "intertwiner_oracle",
    "permutation_from_tableaux",
    "permute_matching",
    "tableau_to_web",
    "transition_matrix",
    "transition_row",
    "verify",
]

__version__ = "0.1.0"
