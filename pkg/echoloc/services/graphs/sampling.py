"""Seeded random graph sources for failure searches."""

import logging
from typing import Iterator

import networkx as nx
import numpy as np

from echoloc.domain import Graph
from echoloc.errors import ValidationError

from .io import to_graph6

logger = logging.getLogger(__name__)

EDGE_PROBABILITY = (0.3, 0.8)
"""Range of the Erdos-Renyi edge probability, drawn per graph."""


def random_connected_graphs(
    count: int, order: int, seed: int = 0
) -> Iterator[Graph]:
    """
    Stream ``count`` connected random graphs on ``order`` vertices.

    Each graph is drawn from G(n, p) with ``p`` uniform in
    :data:`EDGE_PROBABILITY`; disconnected draws are rejected. The stream
    depends only on ``seed``. Graphs are named by their graph6 strings.
    """
    if count < 0:
        raise ValidationError(f"graph count must be nonnegative: {count}")
    if order < 2:
        raise ValidationError(f"random graphs need at least 2 vertices: "
                              f"{order}")
    rng = np.random.default_rng(seed)
    emitted = rejected = 0
    while emitted < count:
        candidate = nx.gnp_random_graph(
            order, float(rng.uniform(*EDGE_PROBABILITY)),
            seed=int(rng.integers(1 << 30)),
        )
        if not nx.is_connected(candidate):
            rejected += 1
            continue
        adjacency = nx.to_numpy_array(candidate, nodelist=range(order),
                                      dtype=np.int64)
        emitted += 1
        yield Graph(adjacency, name=to_graph6(Graph(adjacency)))
    logger.debug("%i random graphs on %i vertices, %i draws rejected",
                 count, order, rejected)
