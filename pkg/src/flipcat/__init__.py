"""Flips in triangulations and plane perfect matchings.

Both families are counted by the Catalan numbers and are identified through
their outdegree sequences.  The package transports flips across this
identification, models the Temperley-Lieb diagram algebra, and analyses
the flip graph of the convex polygon.
"""
from .core import (
    Matching,
    Triangulation,
    bits_from_degrees,
    catalan,
    degrees_from_bits,
    diagonals_cross,
    enumerate_matchings,
    enumerate_triangulations,
    matching_from_arcs,
    matching_from_outdegrees,
    matching_outdegrees,
    matching_to_triangulation,
    triangulation_from_diagonals,
    triangulation_from_outdegrees,
    triangulation_outdegrees,
    triangulation_to_matching,
)
from .flipgraph import (
    FlipGraph,
    all_generator_neighbors,
    build_flip_graph,
    crossing_lower_bound,
    flip_distance,
    generator_distance_formula,
)
from .flips import (
    ArcMove,
    MatchingFlip,
    apply_arc_move,
    apply_matching_flip,
    arc_moves,
    diagonal_flip,
    diagonal_flip_neighbors,
    matching_flip_moves,
    transport_diagonal_flip,
)
from .tl import (
    TLDiagram,
    evaluate_word,
    generator_diagram,
    generator_triangulation,
    identity_diagram,
    multiply,
    word_to_triangulation,
)

__version__ = "0.1.0"
