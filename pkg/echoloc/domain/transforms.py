"""Results of the transforms of a counting function."""

from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class HeatTraceResult:
    """
    Truncated heat trace at one point.

    ``value`` sums ``exp(-t * lambda**2) * w`` over the enumerated jumps (the
    exponent is halved when ``half_laplacian`` is set). ``tail_bound`` is a
    Weyl-type majorant for the jumps beyond the cutoff.
    """

    value: float
    tail_bound: float
    t: float
    half_laplacian: bool = False


@dataclass(frozen=True)
class WaveTraceSample:
    """Gaussian-smoothed cosine transform of ``dN`` at time ``t``."""

    t: float
    value: float
    sigma: float


@dataclass(frozen=True)
class RecoveredCount:
    """Counting value rebuilt from a quantum energy CDF."""

    frequency: float
    value: float
    band: float
    """Half-width of the uncertainty band, of order ``cutoff**(d - 1)``."""


@dataclass(frozen=True)
class CurvatureEstimate:
    """Scalar curvature extrapolated from heat-trace samples."""

    scalar_curvature: float
    samples: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)
    """``(t, 6 ((4 pi t)**(d/2) H(t) - 1) / t)`` for each sampled time."""

    cutoff: float = 0.0

    @property
    def gaussian_curvature(self) -> float:
        """Half the scalar curvature, for surfaces."""
        return self.scalar_curvature / 2


@dataclass(frozen=True)
class WaveTrace:
    """Smoothed wave trace on a time grid with its detected looping times."""

    samples: Tuple[WaveTraceSample, ...]
    sigma: float
    looping_times: Tuple[float, ...] = field(default_factory=tuple)
