"""Vibrating string on ``[0, a]``."""

import math
from typing import List, Sequence, Tuple

import numpy as np

from echoloc.domain import BoundaryCondition, EigenspaceBlock, Kernel, Point

from .base import SpectralModel, centers, constant_kernel
from .exceptions import InvalidPoint


class IntervalModel(SpectralModel):
    """
    Laplacian on an interval of length ``a``.

    Dirichlet eigenfunctions are ``sqrt(2/a) sin(n pi x / a)`` for ``n >= 1``;
    Neumann eigenfunctions are the constant ``1/sqrt(a)`` and
    ``sqrt(2/a) cos(n pi x / a)``. All eigenvalues are simple.
    """

    @property
    def length(self) -> float:
        """Interval length ``a``."""
        return self.geometry.a

    @property
    def neumann(self) -> bool:
        """Whether the ends are free."""
        return self.geometry.bc is BoundaryCondition.neumann

    def estimate_block_count(self, cutoff: float) -> int:
        """Exactly ``floor(a * cutoff / pi)`` plus the constant mode."""
        return int(self.length * cutoff / math.pi) + 1

    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        a = self.length
        blocks = []
        if self.neumann:
            blocks.append(EigenspaceBlock(0.0, 1, constant_kernel(1.0 / a)))
        n = 1
        while n * math.pi / a <= cutoff:
            blocks.append(
                EigenspaceBlock(n * math.pi / a, 1, self._mode(n))
            )
            n += 1
        return blocks

    def _mode(self, n: int) -> Kernel:
        k = n * math.pi / self.length
        scale = 2.0 / self.length
        wave = np.cos if self.neumann else np.sin

        def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
            return scale * wave(k * x[..., 0]) * wave(k * y[..., 0])

        return kernel

    def check_point(self, x: Sequence[float]) -> Point:
        """Dirichlet points lie in ``(0, a)``; Neumann points in ``[0, a]``."""
        point = self._check_arity(x)
        (c,) = point
        inside = 0 <= c <= self.length if self.neumann \
            else 0 < c < self.length
        if not inside:
            raise InvalidPoint(f"{c} is not inside {self.geometry}")
        return point

    def images(self, x: Point) -> List[Point]:
        """Identity and reflection about the midpoint."""
        return [x, (self.length - x[0],)]

    def grid(self, resolution: int) -> np.ndarray:
        """Cell midpoints along the string."""
        return centers(resolution, self.length)[:, None]

    def bounds(self) -> List[Tuple[float, float]]:
        """The closed interval."""
        return [(0.0, self.length)]
