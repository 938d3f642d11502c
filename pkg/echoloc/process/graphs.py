"""Vertex counting functions, cospectral vertices and echolocation failures."""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from echoloc import config
from echoloc.domain import (
    CountingFunction,
    FailureReport,
    Graph,
    GraphOperator,
    GraphSpectrum,
)
from echoloc.errors import EcholocError, ValidationError
from echoloc.services.graphs import (
    automorphism_orbits,
    similar,
    spectrum,
    to_graph6,
    walk_moments,
)
from echoloc.services.graphs.moments import Moment
from echoloc.utils import ordered_map

from .counting import assemble

logger = logging.getLogger(__name__)

PREFILTER_TOL = 1e-6
"""Float weight gap beyond which two vertices are certainly not cospectral."""


def vertex_counting_function(
    spec: GraphSpectrum,
    v: int,
    threshold: float = config.SUPPRESSION_THRESHOLD,
) -> CountingFunction:
    """
    Counting function of vertex ``v``: cluster weights at cluster eigenvalues.

    The whole spectrum is enumerated, so the result is complete and reaches 1
    at the largest eigenvalue.
    """
    if not 0 <= v < spec.n:
        raise ValidationError(f"no vertex {v} in a graph on {spec.n}")
    jumps, suppressed = assemble(
        zip(spec.clusters, spec.vertex_weights[:, v]), threshold
    )
    return CountingFunction(
        jumps=jumps,
        cutoff=spec.clusters[-1],
        model=f"graph:{spec.name}",
        point=(float(v),),
        suppressed=suppressed,
        complete=True,
    )


def cospectral_vertex_pairs(
    graph: Graph,
    operator: GraphOperator = GraphOperator.normalized_laplacian,
    cluster_tol: float = config.CLUSTER_TOL,
) -> List[Tuple[int, int]]:
    """
    Pairs ``u < v`` whose counting functions coincide.

    Float weights only rule pairs out. Survivors are decided by the exact
    walk moments of order ``0 .. n - 1``, which pin down a spectral measure
    carried by at most ``n`` eigenvalues.
    """
    weights = spectrum(graph, operator, cluster_tol).vertex_weights
    moments: Dict[int, List[Moment]] = {}

    def moments_of(v: int) -> List[Moment]:
        if v not in moments:
            moments[v] = walk_moments(graph, v, graph.n - 1, operator)
        return moments[v]

    pairs = []
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if np.max(np.abs(weights[:, u] - weights[:, v])) > PREFILTER_TOL:
                continue
            if moments_of(u) == moments_of(v):
                pairs.append((u, v))
    return pairs


def echolocation_failure(
    graph: Graph,
    operator: GraphOperator = GraphOperator.normalized_laplacian,
    cluster_tol: float = config.CLUSTER_TOL,
) -> Optional[FailureReport]:
    """Cospectral pairs of ``graph`` that no automorphism relates, if any."""
    orbits = automorphism_orbits(graph)
    pairs = tuple(
        pair for pair in cospectral_vertex_pairs(graph, operator, cluster_tol)
        if not similar(orbits, *pair)
    )
    if not pairs:
        return None
    return FailureReport(to_graph6(graph), pairs, orbits, graph.name)


def find_echolocation_failures(
    graphs: Iterable[Graph],
    operator: GraphOperator = GraphOperator.normalized_laplacian,
    cluster_tol: float = config.CLUSTER_TOL,
    threads: Optional[int] = None,
) -> Iterator[FailureReport]:
    """
    Stream the graphs of ``graphs`` on which echolocation fails.

    Graphs are analysed in parallel and reported in input order. A graph that
    cannot be analysed is logged and skipped.
    """
    def analyse(graph: Graph) -> Optional[FailureReport]:
        try:
            return echolocation_failure(graph, operator, cluster_tol)
        except EcholocError as e:
            logger.warning("skipping graph %r: %s", graph.name, e)
            return None

    for report in ordered_map(analyse, graphs, threads):
        if report is not None:
            logger.debug("echolocation fails on %s", report.graph6)
            yield report
