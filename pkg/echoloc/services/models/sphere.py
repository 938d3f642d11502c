"""Round unit sphere."""

import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.special import eval_legendre

from echoloc.domain import EigenspaceBlock, Kernel, Orbit, OrbitKind, Point

from .base import SpectralModel, centers
from .exceptions import InvalidPoint


class SphereModel(SpectralModel):
    """
    Unit sphere in colatitude/longitude coordinates.

    Degree ``l`` harmonics have frequency ``sqrt(l (l + 1))`` and
    multiplicity ``2 l + 1``. By the addition theorem the block kernel is
    ``(2 l + 1) / (4 pi) P_l(cos gamma)`` with ``gamma`` the angle between
    the two points.
    """

    homogeneous = True

    def estimate_block_count(self, cutoff: float) -> int:
        """One block per degree."""
        return int(cutoff) + 1

    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        blocks = []
        degree = 0
        while degree * (degree + 1) <= cutoff * cutoff * (1 + 1e-12):
            frequency = math.sqrt(degree * (degree + 1))
            if frequency <= cutoff:
                blocks.append(
                    EigenspaceBlock(frequency, 2 * degree + 1, _zonal(degree))
                )
            degree += 1
        return blocks

    def check_point(self, x: Sequence[float]) -> Point:
        """Colatitude in ``[0, pi]``; any finite longitude."""
        point = self._check_arity(x)
        if not 0 <= point[0] <= math.pi:
            raise InvalidPoint(f"colatitude out of range: {point[0]}")
        return point

    def isometry_orbit(self, x: Sequence[float]) -> Orbit:
        """Rotations act transitively."""
        self.check_point(x)
        return Orbit(OrbitKind.everything)

    def same_orbit(self, x: Point, y: Point, tol: float = 0.0) -> bool:
        """Rotations act transitively."""
        return True

    def canonical(self, x: Point) -> Point:
        """All points are equivalent to the north pole."""
        return (0.0, 0.0)

    def grid(self, resolution: int) -> np.ndarray:
        """Cell centres in colatitude and longitude."""
        thetas, phis = np.meshgrid(
            centers(resolution, math.pi),
            centers(resolution, 2 * math.pi),
            indexing="ij",
        )
        return np.stack([thetas.ravel(), phis.ravel()], axis=-1)

    def bounds(self) -> List[Tuple[float, float]]:
        """Colatitude and one turn of longitude."""
        return [(0.0, math.pi), (0.0, 2 * math.pi)]


def angle_cosine(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Cosine of the angle between two points of the sphere."""
    # haversine form: exactly 1 on the diagonal
    haversine = np.sin((x[..., 0] - y[..., 0]) / 2) ** 2 \
        + np.sin(x[..., 0]) * np.sin(y[..., 0]) \
        * np.sin((x[..., 1] - y[..., 1]) / 2) ** 2
    return np.clip(1.0 - 2.0 * haversine, -1.0, 1.0)


def _zonal(degree: int) -> Kernel:
    scale = (2 * degree + 1) / (4 * math.pi)

    def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return scale * eval_legendre(degree, angle_cosine(x, y))

    return kernel
