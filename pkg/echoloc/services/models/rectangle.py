"""Rectangular plate ``(0, 1) x (0, b)`` and the unit square."""

import logging
import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from echoloc.domain import (
    BoundaryCondition,
    EigenspaceBlock,
    Kernel,
    ModelKind,
    Point,
)

from .base import SpectralModel, centers
from .exceptions import InvalidPoint

logger = logging.getLogger(__name__)


class RectangleModel(SpectralModel):
    """
    Laplacian on the rectangle with sides 1 and ``b``.

    Dirichlet eigenfunctions are ``2/sqrt(b) sin(n pi x) sin(m pi y / b)``
    with frequency ``pi sqrt(n**2 + m**2 / b**2)``. When ``b**2 = p/q`` is
    rational, two index pairs share a frequency exactly when the integers
    ``n**2 p + m**2 q`` agree, so multiplicities are decided without
    comparing floats. An irrational ``b**2`` makes every eigenvalue simple.
    """

    @property
    def side(self) -> float:
        """Second side ``b``."""
        return self.geometry.side

    @property
    def neumann(self) -> bool:
        """Whether the edges are free."""
        return self.geometry.bc is BoundaryCondition.neumann

    @property
    def is_square(self) -> bool:
        """Whether the dihedral group of order 8 acts."""
        return self.geometry.kind is ModelKind.square

    def estimate_block_count(self, cutoff: float) -> int:
        """Lattice points in the quarter ellipse, with a perimeter margin."""
        r = cutoff / math.pi
        return int(math.pi / 4 * r * r * self.side + r * (1 + self.side)) + 1

    def _pairs(self, cutoff: float) -> List[Tuple[int, int]]:
        start = 0 if self.neumann else 1
        # widened so pairs exactly at the cutoff survive rounding
        r2 = (cutoff / math.pi) ** 2 * (1 + 1e-9)
        b2 = self.side ** 2
        pairs = []
        n = start
        while n * n <= r2:
            m = start
            while n * n + m * m / b2 <= r2:
                pairs.append((n, m))
                m += 1
            n += 1
        return pairs

    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        b2 = self.geometry.b_squared
        groups: Dict[object, List[Tuple[int, int]]] = defaultdict(list)
        if b2 is None:
            for n, m in self._pairs(cutoff):
                groups[(n, m)].append((n, m))
        else:
            p, q = b2.numerator, b2.denominator
            for n, m in self._pairs(cutoff):
                groups[n * n * p + m * m * q].append((n, m))
        blocks = []
        for pairs in groups.values():
            n, m = pairs[0]
            frequency = math.pi * math.sqrt(n * n + m * m / self.side ** 2)
            if frequency > cutoff:
                continue
            blocks.append(
                EigenspaceBlock(frequency, len(pairs), self._kernel(pairs))
            )
        blocks.sort(key=lambda block: block.frequency)
        logger.debug("%s: %i blocks up to %s", self.geometry, len(blocks),
                     cutoff)
        return blocks

    def _kernel(self, pairs: List[Tuple[int, int]]) -> Kernel:
        b = self.side
        n = np.array([pair[0] for pair in pairs], dtype=float)
        m = np.array([pair[1] for pair in pairs], dtype=float)
        if self.neumann:
            wave = np.cos
            scale = (
                np.where(n == 0, 1.0, 2.0) * np.where(m == 0, 1.0, 2.0) / b
            )
        else:
            wave = np.sin
            scale = np.full(n.shape, 4.0 / b)

        def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
            fx = wave(math.pi * n * x[..., 0, None]) \
                * wave(math.pi * m * x[..., 1, None] / b)
            fy = wave(math.pi * n * y[..., 0, None]) \
                * wave(math.pi * m * y[..., 1, None] / b)
            return np.sum(scale * fx * fy, axis=-1)

        return kernel

    def check_point(self, x: Sequence[float]) -> Point:
        """Dirichlet points lie in the open rectangle."""
        point = self._check_arity(x)
        u, v = point
        if self.neumann:
            inside = 0 <= u <= 1 and 0 <= v <= self.side
        else:
            inside = 0 < u < 1 and 0 < v < self.side
        if not inside:
            raise InvalidPoint(f"{point} is not inside {self.geometry}")
        return point

    def images(self, x: Point) -> List[Point]:
        """Klein four-group images; the square adds the diagonal flips."""
        u, v = x
        b = self.side
        images = [(u, v), (1 - u, v), (u, b - v), (1 - u, b - v)]
        if self.is_square:
            images += [(v, u), (1 - v, u), (v, 1 - u), (1 - v, 1 - u)]
        return images

    def grid(self, resolution: int) -> np.ndarray:
        """Cell centres of a ``resolution x resolution`` mesh."""
        us, vs = np.meshgrid(
            centers(resolution, 1.0),
            centers(resolution, self.side),
            indexing="ij",
        )
        return np.stack([us.ravel(), vs.ravel()], axis=-1)

    def bounds(self) -> List[Tuple[float, float]]:
        """The closed rectangle."""
        return [(0.0, 1.0), (0.0, self.side)]
