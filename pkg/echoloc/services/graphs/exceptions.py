"""Exceptions raised by the graph service."""

from echoloc.errors import EcholocError, ValidationError

__all__ = (
    "Graph6ParseError",
    "DisconnectedGraph",
    "IsolatedVertex",
    "GraphTooLarge",
    "NumericalError",
)


class Graph6ParseError(ValidationError):
    """A graph6 string is malformed."""

    def __init__(self, message: str, offset: int = 0):
        """Record the byte offset of the first bad character."""
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DisconnectedGraph(ValidationError):
    """Spectral operations need a connected graph."""


class IsolatedVertex(DisconnectedGraph):
    """The normalized Laplacian is undefined at a vertex of degree zero."""


class GraphTooLarge(ValidationError):
    """The graph exceeds the size limit of an exhaustive search."""


class NumericalError(EcholocError):
    """The eigensolver failed to produce an orthonormal eigenbasis."""
