"""Graph operators and their clustered eigendecompositions."""

import logging
from typing import List

import networkx as nx
import numpy as np

from echoloc import config
from echoloc.domain import Graph, GraphOperator, GraphSpectrum

from .exceptions import DisconnectedGraph, IsolatedVertex, NumericalError
from .io import to_networkx

logger = logging.getLogger(__name__)

ORTHONORMALITY_TOL = 1e-10


def check_connected(graph: Graph) -> None:
    """Raise :class:`.DisconnectedGraph` unless ``graph`` is connected."""
    if graph.n == 0:
        raise DisconnectedGraph("the empty graph has no spectrum")
    if not nx.is_connected(to_networkx(graph)):
        raise DisconnectedGraph(f"graph {graph.name!r} is not connected")


def normalized_laplacian(graph: Graph) -> np.ndarray:
    """
    Normalized Laplacian ``I - D**(-1/2) A D**(-1/2)``.

    Raises
    ------
    :class:`.IsolatedVertex`
        If a vertex has degree zero.
    :class:`.DisconnectedGraph`
        If the graph is not connected.
    """
    degrees = graph.degrees
    isolated = np.flatnonzero(degrees == 0)
    if isolated.size:
        raise IsolatedVertex(
            f"vertex {int(isolated[0])} of {graph.name!r} is isolated"
        )
    check_connected(graph)
    scale = 1 / np.sqrt(degrees.astype(float))
    laplacian = np.eye(graph.n) - scale[:, None] * graph.adjacency * scale
    return (laplacian + laplacian.T) / 2


def operator_matrix(graph: Graph, operator: GraphOperator) -> np.ndarray:
    """Matrix of ``operator`` on ``graph``."""
    if operator is GraphOperator.normalized_laplacian:
        return normalized_laplacian(graph)
    check_connected(graph)
    return graph.adjacency.astype(float)


def cluster_eigenvalues(
    eigenvalues: np.ndarray, tol: float = config.CLUSTER_TOL
) -> List[List[int]]:
    """
    Group the indices of sorted eigenvalues into clusters.

    A new cluster starts where the gap exceeds ``tol * max(1, |lambda|)``.
    """
    clusters: List[List[int]] = []
    for index, value in enumerate(eigenvalues):
        if clusters and value - eigenvalues[index - 1] \
                <= tol * max(1.0, abs(value)):
            clusters[-1].append(index)
        else:
            clusters.append([index])
    return clusters


def spectrum(
    graph: Graph,
    operator: GraphOperator = GraphOperator.normalized_laplacian,
    cluster_tol: float = config.CLUSTER_TOL,
) -> GraphSpectrum:
    """
    Eigenvalue clusters of ``operator`` with per-vertex projector weights.

    ``vertex_weights[k, v]`` sums ``|e_j(v)|**2`` over the eigenvectors of
    cluster ``k``, which does not depend on the basis inside the cluster.
    """
    matrix = operator_matrix(graph, GraphOperator(operator))
    try:
        eigenvalues, vectors = np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"eigensolver failed: {e}") from e
    gram = vectors.T @ vectors
    if not np.all(np.isfinite(vectors)) \
            or np.max(np.abs(gram - np.eye(graph.n))) > ORTHONORMALITY_TOL:
        raise NumericalError(f"eigenbasis of {graph.name!r} not orthonormal")
    clusters = cluster_eigenvalues(eigenvalues, cluster_tol)
    squares = vectors ** 2
    weights = np.stack([squares[:, indices].sum(axis=1)
                        for indices in clusters])
    logger.debug("%s: %i clusters of %i eigenvalues", graph.name,
                 len(clusters), graph.n)
    return GraphSpectrum(
        operator=GraphOperator(operator),
        eigenvalues=eigenvalues,
        clusters=tuple(float(np.mean(eigenvalues[indices]))
                       for indices in clusters),
        multiplicities=tuple(len(indices) for indices in clusters),
        vertex_weights=weights,
        name=graph.name,
    )
