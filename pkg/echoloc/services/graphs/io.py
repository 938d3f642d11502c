"""
Reading and writing graphs.

graph6 strings follow the layout of the nauty tools: a size header, then the
upper triangle of the adjacency matrix in column-major order, packed six bits
per printable character with an offset of 63.
"""

import logging
import os
from typing import Iterator, List, Tuple

import networkx as nx
import numpy as np

from echoloc.domain import Graph
from echoloc.errors import ValidationError

from .exceptions import Graph6ParseError

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
OFFSET = 63
LAST = 126
"""Largest byte value allowed in a graph6 string."""


def _size(text: str) -> Tuple[int, int]:
    """Vertex count and the offset where the adjacency bits start."""
    if not text:
        raise Graph6ParseError("empty graph6 string", 0)
    if text[0] != "~":
        return ord(text[0]) - OFFSET, 1
    if len(text) > 1 and text[1] == "~":
        start, width = 2, 6
    else:
        start, width = 1, 3
    chunk = text[start:start + width]
    if len(chunk) < width:
        raise Graph6ParseError("truncated size header", len(text))
    n = 0
    for char in chunk:
        n = (n << 6) | (ord(char) - OFFSET)
    return n, start + width


def parse_graph6(text: str, name: str = "") -> Graph:
    """
    Decode one graph6 string.

    Raises
    ------
    :class:`.Graph6ParseError`
        If the header, the length or a character is invalid. The error
        carries the byte offset of the problem.
    """
    raw = text.strip()
    shift = 0
    if raw.startswith(HEADER):
        raw, shift = raw[len(HEADER):], len(HEADER)
    for index, char in enumerate(raw):
        if not OFFSET <= ord(char) <= LAST:
            raise Graph6ParseError(f"invalid character {char!r}",
                                   shift + index)
    n, start = _size(raw)
    data = raw[start:]
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) < expected:
        raise Graph6ParseError(
            f"expected {expected} data bytes for {n} vertices, "
            f"got {len(data)}", shift + len(raw)
        )
    if len(data) > expected:
        raise Graph6ParseError("trailing data", shift + start + expected)
    padding = 6 * expected - n * (n - 1) // 2
    if padding and (ord(data[-1]) - OFFSET) & ((1 << padding) - 1):
        raise Graph6ParseError("nonzero padding bits",
                               shift + len(raw) - 1)
    decoded = nx.from_graph6_bytes(raw.encode("ascii"))
    adjacency = nx.to_numpy_array(decoded, nodelist=range(n), dtype=np.int64)
    return Graph(adjacency, name=name or raw)


def to_graph6(graph: Graph) -> str:
    """Encode ``graph`` as a graph6 string without header."""
    encoded = nx.to_graph6_bytes(to_networkx(graph), header=False)
    return encoded.decode("ascii").strip()


def parse_edge_list(text: str, name: str = "") -> Graph:
    """
    Build a graph from ``u v`` lines with 0-indexed vertices.

    Blank lines and ``#`` comments are skipped. The vertex count is one more
    than the largest label.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    try:
        parsed = nx.parse_edgelist(lines, comments="#", nodetype=int,
                                   data=False)
    except (TypeError, IndexError) as e:
        raise Graph6ParseError(f"malformed edge list: {e}") from e
    if any(node < 0 for node in parsed.nodes):
        raise Graph6ParseError("vertex labels must be nonnegative")
    if nx.number_of_selfloops(parsed):
        raise Graph6ParseError("self-loops are not allowed")
    n = max(parsed.nodes) + 1 if len(parsed) else 0
    adjacency = nx.to_numpy_array(parsed, nodelist=range(n), dtype=np.int64)
    return Graph(adjacency, name=name)


def _looks_like_graph6(lines: List[str]) -> bool:
    return all(len(line.split()) == 1 for line in lines)


def read_graphs(path: str, skip_invalid: bool = False) -> Iterator[Graph]:
    """
    Stream the graphs of a file.

    A file whose lines are single tokens holds one graph6 string per line;
    anything else is read as one edge list. With ``skip_invalid`` a
    malformed graph6 line is logged and skipped instead of raising.
    """
    with open(path) as f:
        lines = [line.strip() for line in f]
    content = [(number, line) for number, line in enumerate(lines, 1)
               if line and not line.startswith("#")]
    if not _looks_like_graph6([line for _, line in content]):
        stem = os.path.splitext(os.path.basename(path))[0]
        logger.debug("reading %s as an edge list", path)
        yield parse_edge_list("\n".join(lines), name=stem)
        return
    logger.debug("reading %i graph6 strings from %s", len(content), path)
    for number, line in content:
        try:
            graph = parse_graph6(line)
        except ValidationError as e:
            if not skip_invalid:
                raise
            logger.warning("%s:%i: skipping %r: %s", path, number, line, e)
            continue
        yield graph


def to_networkx(graph: Graph) -> nx.Graph:
    """Unweighted :class:`networkx.Graph` on vertices ``0 .. n - 1``."""
    converted = nx.Graph()
    converted.add_nodes_from(range(graph.n))
    converted.add_edges_from(graph.edges)
    return converted
