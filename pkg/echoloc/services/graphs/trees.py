"""Free trees, one per isomorphism class."""

import logging
from typing import Iterator

import networkx as nx
import numpy as np

from echoloc import config
from echoloc.domain import Graph
from echoloc.errors import ValidationError

from .io import to_graph6

logger = logging.getLogger(__name__)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """
    Stream the trees on ``n`` vertices up to isomorphism.

    Each tree is named by its graph6 string.
    """
    if not 1 <= n <= config.MAX_TREE_ORDER:
        raise ValidationError(
            f"tree order must lie in 1..{config.MAX_TREE_ORDER}, got {n}"
        )
    if n == 1:
        yield Graph(np.zeros((1, 1), dtype=np.int64), name="@")
        return
    for count, tree in enumerate(nx.nonisomorphic_trees(n), 1):
        adjacency = nx.to_numpy_array(tree, nodelist=sorted(tree),
                                      dtype=np.int64)
        yield Graph(adjacency, name=to_graph6(Graph(adjacency)))
    logger.debug("%i trees on %i vertices", count, n)
