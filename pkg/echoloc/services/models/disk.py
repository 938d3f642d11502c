"""Dirichlet unit disk."""

import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.special import jn_zeros, jv

from echoloc.domain import EigenspaceBlock, Kernel, Orbit, OrbitKind, Point

from .base import SpectralModel, centers
from .exceptions import InvalidPoint


class DiskModel(SpectralModel):
    """
    Unit disk with Dirichlet boundary, polar coordinates ``(r, theta)``.

    Frequencies are the Bessel zeros ``j_{m,k}``. With
    ``int_0^1 J_m(j r)**2 r dr = J_{m+1}(j)**2 / 2`` the block kernels are

    - ``m = 0``: ``J_0(j r) J_0(j s) / (pi J_1(j)**2)``
    - ``m >= 1``: ``2 J_m(j r) J_m(j s) cos(m (theta - phi)) /
      (pi J_{m+1}(j)**2)``, multiplicity 2.

    Zeros of different orders never coincide, so each ``(m, k)`` is its own
    block.
    """

    def estimate_block_count(self, cutoff: float) -> int:
        """Weyl count of eigenvalues, with a perimeter margin."""
        return int(cutoff * cutoff / 4 + cutoff) + 1

    def _enumerate(self, cutoff: float) -> List[EigenspaceBlock]:
        blocks = []
        order = 0
        # j_{m,1} > m, so no order beyond the cutoff contributes
        while order < cutoff:
            count = int(cutoff / math.pi) + 2
            zeros = jn_zeros(order, count)
            while zeros[-1] <= cutoff:
                count *= 2
                zeros = jn_zeros(order, count)
            for zero in zeros[zeros <= cutoff]:
                blocks.append(
                    EigenspaceBlock(
                        float(zero),
                        1 if order == 0 else 2,
                        _bessel_mode(order, float(zero)),
                    )
                )
            order += 1
        blocks.sort(key=lambda block: block.frequency)
        return blocks

    def check_point(self, x: Sequence[float]) -> Point:
        """Radius in ``[0, 1)``; any finite angle."""
        point = self._check_arity(x)
        if not 0 <= point[0] < 1:
            raise InvalidPoint(f"radius out of range: {point[0]}")
        return point

    def isometry_orbit(self, x: Sequence[float]) -> Orbit:
        """Rotations sweep the circle of radius ``r``."""
        point = self.check_point(x)
        if point[0] == 0:
            return Orbit(OrbitKind.finite, ((0.0, 0.0),))
        return Orbit(OrbitKind.circle, radius=point[0])

    def same_orbit(self, x: Point, y: Point, tol: float = 1e-6) -> bool:
        """Points on one centred circle are equivalent."""
        return abs(x[0] - y[0]) <= tol

    def canonical(self, x: Point) -> Point:
        """Representative on the positive axis."""
        return (x[0], 0.0)

    def grid(self, resolution: int) -> np.ndarray:
        """
        Radii only.

        Weights do not depend on the angle, so the scan runs along the axis.
        """
        radii = centers(resolution, 1.0)
        return np.stack([radii, np.zeros_like(radii)], axis=-1)

    def grid_shape(self, resolution: int) -> Tuple[int, ...]:
        """One radial line."""
        return (resolution,)

    def bounds(self) -> List[Tuple[float, float]]:
        """Radius and one turn."""
        return [(0.0, 1.0), (0.0, 2 * math.pi)]


def _bessel_mode(order: int, zero: float) -> Kernel:
    norm = jv(order + 1, zero) ** 2
    scale = (1.0 if order == 0 else 2.0) / (math.pi * norm)

    def kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        radial = jv(order, zero * x[..., 0]) * jv(order, zero * y[..., 0])
        if order == 0:
            return scale * radial
        return scale * radial * np.cos(order * (x[..., 1] - y[..., 1]))

    return kernel
