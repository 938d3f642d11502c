"""Base class for the explicit spectral models."""

import logging
import threading
from abc import ABC, abstractmethod
from typing import List, Sequence, Tuple

import numpy as np

from echoloc import config
from echoloc.domain import (
    EigenspaceBlock,
    Kernel,
    ModelGeometry,
    Orbit,
    OrbitKind,
    Point,
)
from echoloc.errors import ValidationError

from .exceptions import CapacityExceeded, InvalidPoint

logger = logging.getLogger(__name__)


class SpectralModel(ABC):
    """
    A model geometry with an explicit eigenspace enumeration.

    Subclasses supply the raw enumeration, the point chart and the isometry
    group. Enumerations are cached up to the largest cutoff requested so far;
    block sequences are immutable and safe to share between threads.
    """

    homogeneous = False
    """Whether the isometry group acts transitively."""

    def __init__(self, geometry: ModelGeometry) -> None:
        """Bind the model to its geometry."""
        self.geometry = geometry
        self._lock = threading.Lock()
        self._blocks: List[EigenspaceBlock] = []
        self._enumerated_to = 0.0

    @property
    def dimension(self) -> int:
        """Manifold dimension."""
        return self.geometry.dimension

    @property
    def volume(self) -> float:
        """Total volume."""
        return self.geometry.volume

    @abstractmethod
    def estimate_block_count(self, cutoff: float) -> int:
        """Upper estimate of the number of blocks up to ``cutoff``."""

    @abstractmethod
    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        """Enumerate all blocks with frequency ``<= cutoff``."""

    def enumerate_blocks(self, cutoff: float) -> List[EigenspaceBlock]:
        """
        Eigenspace blocks with frequency at most ``cutoff``.

        Parameters
        ----------
        cutoff : float
            Positive frequency cutoff.

        Returns
        -------
        list of :class:`.EigenspaceBlock`
            Strictly increasing frequencies with exact multiplicities.

        Raises
        ------
        :class:`.CapacityExceeded`
            When the estimated block count exceeds the configured budget.
        """
        if not cutoff > 0:
            raise ValidationError(f"cutoff must be positive: {cutoff}")
        estimate = self.estimate_block_count(cutoff)
        if estimate > config.MAX_BLOCKS:
            raise CapacityExceeded(
                f"{self.geometry} needs about {estimate} blocks up to "
                f"{cutoff}; the budget is {config.MAX_BLOCKS}",
                estimate,
            )
        with self._lock:
            if cutoff > self._enumerated_to:
                logger.debug("enumerating %s up to %s", self.geometry, cutoff)
                self._blocks = self._enumerate(cutoff)
                self._enumerated_to = cutoff
            blocks = self._blocks
        return [block for block in blocks if block.frequency <= cutoff]

    @abstractmethod
    def check_point(self, x: Sequence[float]) -> Point:
        """Return ``x`` as a point of this model, or raise InvalidPoint."""

    def _check_arity(self, x: Sequence[float]) -> Point:
        point = tuple(float(c) for c in x)
        if len(point) != self.dimension:
            raise InvalidPoint(
                f"{self.geometry} needs {self.dimension} coordinates, "
                f"got {len(point)}"
            )
        if not all(np.isfinite(point)):
            raise InvalidPoint(f"non-finite coordinates: {point}")
        return point

    def images(self, x: Point) -> List[Point]:
        """Images of ``x`` under the (finite) isometry group."""
        return [x]

    def isometry_orbit(self, x: Sequence[float]) -> Orbit:
        """Orbit of ``x``; finite orbits are deduplicated in group order."""
        point = self.check_point(x)
        return Orbit(OrbitKind.finite, tuple(_unique(self.images(point))))

    def same_orbit(
        self, x: Point, y: Point, tol: float = config.ORBIT_TOL
    ) -> bool:
        """Whether some isometry maps ``x`` to within ``tol`` of ``y``."""
        target = np.asarray(y, dtype=float)
        return any(
            np.max(np.abs(np.asarray(image) - target)) <= tol
            for image in self.images(tuple(x))
        )

    def canonical(self, x: Point) -> Point:
        """Orbit representative used to order report entries."""
        return min(self.images(tuple(x)))

    @abstractmethod
    def grid(self, resolution: int) -> np.ndarray:
        """Interior sample points of shape ``(P, d)`` for a coarse scan."""

    def grid_shape(self, resolution: int) -> Tuple[int, ...]:
        """Shape of the scan mesh returned by :meth:`grid`."""
        return (resolution,) * self.dimension

    @abstractmethod
    def bounds(self) -> List[Tuple[float, float]]:
        """Coordinate box that contains the chart."""

    def __repr__(self) -> str:
        """Name the model by its spec."""
        return f"{self.__class__.__name__}({self.geometry.spec!r})"


def _unique(points: List[Point], tol: float = 1e-12) -> List[Point]:
    kept: List[Point] = []
    for point in points:
        if not any(
            max(abs(a - b) for a, b in zip(point, other)) <= tol
            for other in kept
        ):
            kept.append(point)
    return kept


def centers(count: int, length: float) -> np.ndarray:
    """Midpoints of ``count`` equal cells of ``[0, length]``."""
    return (np.arange(count) + 0.5) * (length / count)


def constant_kernel(value: float) -> Kernel:
    """Kernel of a block spanned by a constant eigenfunction."""

    def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.full(np.broadcast(x[..., 0], y[..., 0]).shape, value)

    return kernel


def weight_matrix(
    blocks: Sequence[EigenspaceBlock], points: np.ndarray
) -> np.ndarray:
    """Jumps of every block at every point, of shape ``(B, P)``."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if not blocks:
        return np.zeros((0, len(points)))
    return np.stack([block.weight(points) for block in blocks])
