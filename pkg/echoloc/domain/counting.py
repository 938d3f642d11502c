"""Counting functions, timbres and their comparison reports."""

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from mypy_extensions import TypedDict


class Jump(NamedTuple):
    """One jump of a counting function."""

    frequency: float
    weight: float


@dataclass(frozen=True)
class CountingFunction:
    """
    Right-continuous step function stored as sorted jumps.

    ``N(lambda)`` is the sum of the weights of all jumps at frequencies
    ``<= lambda``. Frequencies are strictly increasing, never exceed
    ``cutoff`` and carry positive weights. Jumps that vanished on a nodal
    set are kept in ``suppressed`` by frequency only.
    """

    jumps: Tuple[Jump, ...]
    cutoff: float
    model: str
    point: Tuple[float, ...] = field(default_factory=tuple)
    second_point: Optional[Tuple[float, ...]] = None
    """Second point of a two-point sum."""

    suppressed: Tuple[float, ...] = field(default_factory=tuple)
    complete: bool = False
    """Whether the whole spectrum lies below ``cutoff`` (finite graphs)."""

    @property
    def frequencies(self) -> np.ndarray:
        """Jump frequencies as an array."""
        return np.array([j.frequency for j in self.jumps], dtype=float)

    @property
    def weights(self) -> np.ndarray:
        """Jump weights as an array."""
        return np.array([j.weight for j in self.jumps], dtype=float)

    @property
    def total(self) -> float:
        """Sum of all weights, ``N(cutoff)``."""
        return float(sum(j.weight for j in self.jumps))

    def __len__(self) -> int:
        """Number of jumps."""
        return len(self.jumps)

    def __bool__(self) -> bool:
        """Counting functions are truthy when they have a jump."""
        return bool(self.jumps)


class TimbreEntry(NamedTuple):
    """Loudness of one distinct frequency."""

    frequency: float
    amplitude: float


@dataclass(frozen=True)
class Timbre:
    """Square roots of the jumps of a counting function, in order."""

    entries: Tuple[TimbreEntry, ...]
    model: str = ""
    point: Tuple[float, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        """Number of distinct frequencies."""
        return len(self.entries)


@dataclass(frozen=True)
class MatchReport:
    """Outcome of comparing two counting functions."""

    equal: bool
    frequency: Optional[float] = None
    """Frequency of the first discrepancy."""

    difference: Optional[float] = None
    """Weight difference at the first discrepancy (a weight present on only
    one side counts in full)."""

    frequency_mismatch: bool = False
    """Whether the discrepancy is an unmatched frequency rather than a
    weight difference."""


JumpRecord = TypedDict("JumpRecord", {"lambda": float, "weight": float})


class CountingFunctionRecord(TypedDict, total=False):
    """Serialized counting function."""

    model: str
    point: List[float]
    second_point: List[float]
    cutoff: float
    jumps: List[JumpRecord]
    suppressed: List[float]
    complete: bool
