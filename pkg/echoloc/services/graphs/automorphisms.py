"""Automorphism orbits of small graphs."""

import logging
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.utils import UnionFind

from echoloc import config
from echoloc.domain import Graph

from .exceptions import GraphTooLarge
from .io import to_networkx

logger = logging.getLogger(__name__)


def refine_colors(graph: nx.Graph) -> Dict[int, int]:
    """
    Coarsest equitable coloring finer than the degree partition.

    Colors are relabelled in sorted order of their signatures, so the result
    only depends on the labelled graph.
    """
    colors = {node: graph.degree(node) for node in graph}
    while True:
        signatures = {
            node: (colors[node],
                   tuple(sorted(colors[other] for other in graph[node])))
            for node in graph
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(
            signatures.values())))}
        refined = {node: palette[signatures[node]] for node in graph}
        if len(palette) == len(set(colors.values())):
            return refined
        colors = refined


def _maps_to(graph: nx.Graph, colors: Dict[int, int], u: int, v: int) -> bool:
    """Whether some automorphism sends ``u`` to ``v``."""
    source, target = graph.copy(), graph.copy()
    for node in graph:
        source.nodes[node]["label"] = (colors[node], node == u)
        target.nodes[node]["label"] = (colors[node], node == v)
    matcher = GraphMatcher(
        source, target, node_match=lambda a, b: a["label"] == b["label"]
    )
    return matcher.is_isomorphic()


def automorphism_orbits(graph: Graph) -> Tuple[Tuple[int, ...], ...]:
    """
    Partition the vertices of ``graph`` into automorphism orbits.

    Candidates are the cells of the equitable refinement; each pair is then
    settled by a search for an automorphism pinning one vertex onto the
    other. Orbits are sorted, and listed by their smallest vertex.

    Raises
    ------
    :class:`.GraphTooLarge`
        If the graph has more than ``AUTOMORPHISM_MAX_VERTICES`` vertices.
    """
    if graph.n > config.AUTOMORPHISM_MAX_VERTICES:
        raise GraphTooLarge(
            f"{graph.n} vertices exceed the automorphism search limit of "
            f"{config.AUTOMORPHISM_MAX_VERTICES}"
        )
    converted = to_networkx(graph)
    colors = refine_colors(converted)
    orbits = UnionFind(range(graph.n))
    cells: Dict[int, List[int]] = {}
    for node in range(graph.n):
        cells.setdefault(colors[node], []).append(node)
    for cell in cells.values():
        for index, u in enumerate(cell):
            for v in cell[index + 1:]:
                if orbits[u] != orbits[v] and _maps_to(converted, colors,
                                                        u, v):
                    orbits.union(u, v)
    partition = sorted(tuple(sorted(orbit)) for orbit in orbits.to_sets())
    logger.debug("%s: %i orbits", graph.name, len(partition))
    return tuple(partition)


def similar(orbits: Tuple[Tuple[int, ...], ...], u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` share an orbit."""
    return any(u in orbit and v in orbit for orbit in orbits)
