"""
Graph back end: graph6 and edge-list I/O, operator spectra, exact walk
moments, automorphism orbits, tree enumeration and seeded random graphs.
"""

from .automorphisms import automorphism_orbits, refine_colors, similar
from .exceptions import (
    DisconnectedGraph,
    Graph6ParseError,
    GraphTooLarge,
    IsolatedVertex,
    NumericalError,
)
from .io import parse_edge_list, parse_graph6, read_graphs, to_graph6, \
    to_networkx
from .moments import walk_moments
from .sampling import random_connected_graphs
from .spectrum import normalized_laplacian, operator_matrix, spectrum
from .trees import enumerate_trees

__all__ = (
    "automorphism_orbits",
    "refine_colors",
    "similar",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "read_graphs",
    "random_connected_graphs",
    "to_networkx",
    "walk_moments",
    "normalized_laplacian",
    "operator_matrix",
    "spectrum",
    "enumerate_trees",
    "DisconnectedGraph",
    "Graph6ParseError",
    "GraphTooLarge",
    "IsolatedVertex",
    "NumericalError",
)
