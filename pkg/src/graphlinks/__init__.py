"""Graph-links: labeled graphs as generalized virtual links.

Exact GF(2) linear algebra, graph Reidemeister moves, the Kauffman bracket and
other invariants, parity brackets, chord-diagram realizability and the
correspondence with looped interlacement graphs.
"""

from .canon import canonical_form, isomorphic
from .chi import chi, chi_inverse
from .chords import ChordDiagram, intersection_graph, realize, surgery_components
from .errors import GraphLinkError
from .graph import LabeledGraph, LoopedGraph, local_complement, pivot
from .invariants import (
    atom_genus,
    component_count,
    kauffman_bracket,
    minimality_certificate,
    writhe,
)
from .laurent import LaurentPoly
from .moves import MoveDescriptor, apply_move, detect_moves, equivalence_search
from .parity import GraphSum, bracket_knot, bracket_link2, delta, reduce_sum, smooth

__version__ = "0.1.0"

__all__ = [
    "LabeledGraph",
    "LoopedGraph",
    "local_complement",
    "pivot",
    "canonical_form",
    "isomorphic",
    "LaurentPoly",
    "component_count",
    "writhe",
    "kauffman_bracket",
    "atom_genus",
    "minimality_certificate",
    "MoveDescriptor",
    "apply_move",
    "detect_moves",
    "equivalence_search",
    "ChordDiagram",
    "intersection_graph",
    "surgery_components",
    "realize",
    "chi",
    "chi_inverse",
    "GraphSum",
    "smooth",
    "delta",
    "bracket_knot",
    "bracket_link2",
    "reduce_sum",
    "GraphLinkError",
]
