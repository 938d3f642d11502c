"""Exceptions raised by the spectral model service."""

from echoloc.errors import EcholocError, ValidationError

__all__ = ("CapacityExceeded", "InvalidPoint", "InvalidModel")


class CapacityExceeded(EcholocError):
    """
    The requested cutoff needs more eigenspace blocks than allowed.

    The budget is :const:`echoloc.config.MAX_BLOCKS`.
    """

    def __init__(self, message: str, estimate: int = 0):
        """Record the estimated block count."""
        super().__init__(message)
        self.estimate = estimate


class InvalidPoint(ValidationError):
    """A point lies outside the chart of its model."""


class InvalidModel(ValidationError):
    """No spectral model is available for this geometry."""
