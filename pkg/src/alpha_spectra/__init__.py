"""Extremal A_alpha-index problems on graphs with given independence number.

The A_alpha-matrix of a graph is ``alpha D + (1 - alpha) A``; its largest
eigenvalue is the A_alpha-index.  This package builds the graph families
that attain the extremes, enumerates small graph classes exhaustively and
checks the extremal statements against those censuses.
"""
from __future__ import annotations

from .graph import Graph, GraphError, complement, from_edges, is_connected
from .graph6 import decode, encode
from .canon import canonical_key, are_isomorphic
from .invariants import independence_number, matching_number
from .spectral import (
    alpha_matrix,
    coarsest_equitable,
    complete_bipartite_index,
    index_bounds,
    largest_eigenvalue_of_quotient,
    quotient_matrix,
    spectral_radius,
    star_index,
    threshold_constants,
)
from .search import SearchReport, TheoremVerdict, extremal, verify_theorem
from .appendix import appendix_check

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "SearchReport",
    "TheoremVerdict",
    "alpha_matrix",
    "appendix_check",
    "are_isomorphic",
    "canonical_key",
    "coarsest_equitable",
    "complement",
    "complete_bipartite_index",
    "decode",
    "encode",
    "extremal",
    "from_edges",
    "independence_number",
    "index_bounds",
    "is_connected",
    "largest_eigenvalue_of_quotient",
    "matching_number",
    "quotient_matrix",
    "spectral_radius",
    "star_index",
    "threshold_constants",
    "verify_theorem",
]
