"""Echolocation error classes."""

from typing import Optional


class EcholocError(Exception):
    """Generic echolocation error."""

    def __init__(self, message: str):
        """Initialize the error message."""
        super().__init__(message)
        self.message = message

    @property
    def name(self) -> str:
        """Error name."""
        return self.__class__.__name__

    def __str__(self) -> str:
        """Represent error as a string."""
        return f"{self.name}({self.message})"

    __repr__ = __str__


class ValidationError(EcholocError):
    """A run configuration or an input artifact is malformed."""


class EmptyInput(EcholocError):
    """An operation received no data to work on."""


class InfeasibleSignature(EcholocError):
    """No interior point produces the given spectral signature."""


class TailNotControlled(EcholocError):
    """The enumerated spectrum is too short for the requested time."""

    def __init__(self, message: str, minimal_cutoff: Optional[float] = None):
        """Record the smallest cutoff that would control the tail."""
        super().__init__(message)
        self.minimal_cutoff = minimal_cutoff


class WindowUnresolved(EcholocError):
    """The smoothing window reaches past the enumerated spectrum."""


class OutOfRange(EcholocError):
    """A counting function was evaluated beyond its cutoff."""


class DegenerateNormalization(EcholocError):
    """A ratio was requested with a vanishing denominator."""


class UnsupportedModel(EcholocError):
    """The operation is not defined for this model geometry."""


class NotInSpectrum(EcholocError):
    """A frequency does not belong to the model's spectrum."""


class MismatchedCutoffs(EcholocError):
    """Two counting functions with different cutoffs were compared."""
