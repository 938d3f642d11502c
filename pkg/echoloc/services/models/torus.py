"""Flat torus ``R^2 / (2 pi Z)^2``."""

import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from echoloc import consts
from echoloc.domain import EigenspaceBlock, Kernel, Orbit, OrbitKind, Point

from .base import SpectralModel, centers
from .exceptions import InvalidPoint


class TorusModel(SpectralModel):
    """
    Flat torus of side ``2 pi``.

    Eigenfunctions are the characters ``exp(i k.x)`` for ``k`` in ``Z^2``,
    so the frequencies are ``sqrt(N)`` for every ``N`` that is a sum of two
    squares, with multiplicity the number of such representations. The
    block kernel is ``(2 pi)**-2 sum cos(k.(x - y))``.
    """

    homogeneous = True

    def estimate_block_count(self, cutoff: float) -> int:
        """At most one block per integer ``N <= cutoff**2``."""
        return int(cutoff * cutoff) + 1

    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        # widened so norms exactly at the cutoff survive rounding
        limit = int(math.floor(cutoff * cutoff * (1 + 1e-12)))
        radius = int(math.isqrt(limit))
        ks = np.arange(-radius, radius + 1)
        k1, k2 = np.meshgrid(ks, ks, indexing="ij")
        norms = (k1 * k1 + k2 * k2).ravel()
        keep = norms <= limit
        shells: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for norm, a, b in zip(norms[keep], k1.ravel()[keep],
                              k2.ravel()[keep]):
            shells[int(norm)].append((int(a), int(b)))
        blocks = []
        for norm in sorted(shells):
            frequency = math.sqrt(norm)
            if frequency > cutoff:
                continue
            vectors = shells[norm]
            blocks.append(
                EigenspaceBlock(frequency, len(vectors), _shell(vectors))
            )
        return blocks

    def check_point(self, x: Sequence[float]) -> Point:
        """Angles in ``[0, 2 pi)``."""
        point = self._check_arity(x)
        if not all(0 <= c < consts.TORUS_SIDE for c in point):
            raise InvalidPoint(f"{point} is not inside {self.geometry}")
        return point

    def isometry_orbit(self, x: Sequence[float]) -> Orbit:
        """Every point is in the orbit."""
        self.check_point(x)
        return Orbit(OrbitKind.everything)

    def same_orbit(self, x: Point, y: Point, tol: float = 0.0) -> bool:
        """Translations act transitively."""
        return True

    def canonical(self, x: Point) -> Point:
        """All points are equivalent to the origin."""
        return (0.0, 0.0)

    def grid(self, resolution: int) -> np.ndarray:
        """Cell centres of a ``resolution x resolution`` mesh."""
        axis = centers(resolution, consts.TORUS_SIDE)
        us, vs = np.meshgrid(axis, axis, indexing="ij")
        return np.stack([us.ravel(), vs.ravel()], axis=-1)

    def bounds(self) -> List[Tuple[float, float]]:
        """One fundamental square."""
        return [(0.0, consts.TORUS_SIDE), (0.0, consts.TORUS_SIDE)]


def _shell(vectors: List[Tuple[int, int]]) -> Kernel:
    k = np.array(vectors, dtype=float)
    scale = 1.0 / consts.TORUS_SIDE ** 2

    def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        phase = (x - y)[..., None, :] * k
        return scale * np.sum(np.cos(phase.sum(axis=-1)), axis=-1)

    return kernel
