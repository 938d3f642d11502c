"""Echolocation reports."""

from enum import Enum
from dataclasses import dataclass, field
from typing import List, Tuple

from mypy_extensions import TypedDict

from .base import Point


class LocationStatus(str, Enum):
    """Verdict of an echolocation run."""

    unique_orbit = "unique-orbit"
    multiple_orbits = "multiple-orbits"
    all_points = "all-points"
    """Homogeneous model: every point shares the signature."""

    no_match = "no-match"


@dataclass(frozen=True)
class Candidate:
    """A point whose forward signature matches the target."""

    point: Point
    residual: float


@dataclass(frozen=True)
class LocationReport:
    """Candidates grouped into isometry orbits."""

    status: LocationStatus
    orbits: Tuple[Tuple[Candidate, ...], ...] = field(default_factory=tuple)
    model: str = ""

    @property
    def candidates(self) -> List[Candidate]:
        """All candidates, orbit by orbit."""
        return [c for orbit in self.orbits for c in orbit]

    @property
    def best(self) -> Candidate:
        """Candidate with the smallest residual."""
        return min(self.candidates, key=lambda c: c.residual)


class CandidateRecord(TypedDict):
    """Serialized candidate."""

    point: List[float]
    residual: float


class LocationReportRecord(TypedDict):
    """Serialized location report."""

    status: str
    orbits: List[List[CandidateRecord]]
