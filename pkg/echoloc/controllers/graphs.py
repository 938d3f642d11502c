"""Controller for the graph subcommand."""

import logging
from typing import Iterator, List, Optional, Tuple, Union

from echoloc.domain import (
    CountingFunction,
    FailureReport,
    Graph,
    GraphOperator,
    RunConfig,
)
from echoloc.errors import ValidationError
from echoloc.process import find_echolocation_failures, \
    vertex_counting_function
from echoloc.services.graphs import random_connected_graphs, read_graphs, \
    spectrum

logger = logging.getLogger(__name__)


def _source_graphs(
    run: RunConfig,
    source: Optional[str],
    sample: Optional[Tuple[int, int]],
    skip_invalid: bool,
) -> Iterator[Graph]:
    if sample is not None:
        if source is not None:
            raise ValidationError("--input and --random exclude each other")
        count, order = sample
        logger.debug("sampling %i graphs on %i vertices, seed %i", count,
                     order, run.seed)
        return random_connected_graphs(count, order, run.seed)
    if source is None:
        raise ValidationError("graph needs --input or --random")
    return read_graphs(source, skip_invalid=skip_invalid)


def graph(
    run: RunConfig,
    source: Optional[str] = None,
    operator: GraphOperator = GraphOperator.normalized_laplacian,
    find_failures: bool = False,
    vertex: Optional[int] = None,
    sample: Optional[Tuple[int, int]] = None,
) -> Union[List[FailureReport], List[CountingFunction]]:
    """
    Analyse the graphs in ``source``, or a seeded random sample.

    With ``find_failures`` the result lists the graphs whose cospectral
    vertices are not all similar. Malformed graph6 lines are logged and
    skipped in that mode. Otherwise it lists vertex counting functions, for
    ``vertex`` only when given.

    Parameters
    ----------
    run : :class:`.RunConfig`
        ``run.seed`` drives the random sample.
    source : str
        graph6 or edge-list file.
    sample : tuple
        ``(count, order)``: connected random graphs instead of a file.
    """
    graphs = _source_graphs(run, source, sample, skip_invalid=find_failures)
    if find_failures:
        reports = list(find_echolocation_failures(
            graphs, operator, run.cluster_tol, run.threads
        ))
        logger.debug("%i failures in %s", len(reports), source or "sample")
        return reports
    functions = []
    for graph in graphs:
        result = spectrum(graph, operator, run.cluster_tol)
        vertices = range(graph.n) if vertex is None else [vertex]
        functions += [vertex_counting_function(result, v) for v in vertices]
    return functions
