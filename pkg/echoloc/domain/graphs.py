"""Finite graphs and their vertex spectra."""

from enum import Enum
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from mypy_extensions import TypedDict

from echoloc.errors import ValidationError


class GraphOperator(str, Enum):
    """Symmetric operator whose eigenpairs define vertex counting."""

    adjacency = "adjacency"
    normalized_laplacian = "normalized_laplacian"


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Simple undirected graph on vertices ``0 .. n - 1``.

    The adjacency matrix is a symmetric 0/1 integer matrix with a zero
    diagonal. Connectedness is not required here; spectral operations check
    it themselves.
    """

    adjacency: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        """Normalize and check the adjacency matrix."""
        adjacency = np.asarray(self.adjacency, dtype=np.int64)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValidationError(
                f"adjacency must be square, got shape {adjacency.shape}"
            )
        if not np.isin(adjacency, (0, 1)).all():
            raise ValidationError("adjacency entries must be 0 or 1")
        if not (adjacency == adjacency.T).all():
            raise ValidationError("adjacency must be symmetric")
        if adjacency.trace() != 0:
            raise ValidationError("self-loops are not allowed")
        adjacency.setflags(write=False)
        object.__setattr__(self, "adjacency", adjacency)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return int(self.adjacency.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        """Vertex degrees."""
        return self.adjacency.sum(axis=1)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    @property
    def is_regular(self) -> bool:
        """Whether every vertex has the same degree."""
        return self.n == 0 or len(set(self.degrees.tolist())) == 1

    def __eq__(self, other: object) -> bool:
        """Graphs are equal when their labelled adjacency matrices are."""
        if not isinstance(other, Graph):
            return NotImplemented
        return bool(np.array_equal(self.adjacency, other.adjacency))

    def __hash__(self) -> int:
        """Hash the labelled edge set."""
        return hash((self.n, tuple(self.edges)))


@dataclass(frozen=True, eq=False)
class GraphSpectrum:
    """
    Eigenvalues of a graph operator with per-cluster vertex weights.

    ``vertex_weights[k, v]`` is the diagonal entry at ``v`` of the
    orthogonal projector onto the eigenvalue cluster ``k``; it does not
    depend on the eigenbasis chosen inside the cluster.
    """

    operator: GraphOperator
    eigenvalues: np.ndarray
    clusters: Tuple[float, ...]
    """Representative eigenvalue of each cluster, increasing."""

    multiplicities: Tuple[int, ...]
    vertex_weights: np.ndarray
    name: str = ""

    @property
    def n(self) -> int:
        """Number of vertices."""
        return int(self.vertex_weights.shape[1])


@dataclass(frozen=True)
class FailureReport:
    """A graph with cospectral vertices that are not similar."""

    graph6: str
    pairs: Tuple[Tuple[int, int], ...]
    orbits: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)
    name: str = ""


class FailureRecord(TypedDict):
    """Serialized failure report."""

    graph6: str
    pairs: List[List[int]]
    orbits: List[List[int]]
