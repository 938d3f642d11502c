"""
Exact walk moments.

The ``k``-th moment of the spectral measure of a vertex is a diagonal entry
of the ``k``-th operator power. For the adjacency matrix that is a count of
closed walks. For the normalized Laplacian it equals the diagonal entry of
``(I - D^{-1} A)^k``, a similar matrix with rational entries, so no square
roots of degrees enter.
"""

from fractions import Fraction
from typing import List, Union

import numpy as np

from echoloc.domain import Graph, GraphOperator
from echoloc.errors import ValidationError

from .exceptions import IsolatedVertex

Moment = Union[int, Fraction]


def exact_operator(graph: Graph, operator: GraphOperator) -> np.ndarray:
    """Object array of Python ints or fractions similar to ``operator``."""
    if GraphOperator(operator) is GraphOperator.adjacency:
        return graph.adjacency.astype(object)
    degrees = [int(d) for d in graph.degrees]
    if 0 in degrees:
        raise IsolatedVertex(
            f"vertex {degrees.index(0)} of {graph.name!r} is isolated"
        )
    walk = np.empty((graph.n, graph.n), dtype=object)
    for i in range(graph.n):
        for j in range(graph.n):
            walk[i, j] = Fraction(int(i == j)) \
                - Fraction(int(graph.adjacency[i, j]), degrees[i])
    return walk


def walk_moments(
    graph: Graph,
    v: int,
    k_max: int,
    operator: GraphOperator = GraphOperator.normalized_laplacian,
) -> List[Moment]:
    """
    Moments ``mu_0 .. mu_k_max`` of the spectral measure at ``v``.

    Values are Python ints for the adjacency operator and fractions for the
    normalized Laplacian; no floating point is involved.
    """
    if not 0 <= v < graph.n:
        raise ValidationError(f"no vertex {v} in a graph on {graph.n}")
    if k_max < 0:
        raise ValidationError(f"k_max must be nonnegative: {k_max}")
    matrix = exact_operator(graph, operator)
    row = np.zeros(graph.n, dtype=object)
    row[v] = 1
    moments: List[Moment] = [1]
    for _ in range(k_max):
        row = row.dot(matrix)
        moments.append(row[v])
    return moments
