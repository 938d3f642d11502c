"""Base domain classes for model geometries and their eigenspaces."""

import math
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Tuple

import numpy as np

from echoloc import consts
from echoloc.errors import ValidationError


Point = Tuple[float, ...]
"""
Coordinates of a point in a model chart.

- interval: ``(x,)`` with ``0 < x < a``
- rectangle/square: ``(x, y)`` in the open rectangle ``(0, 1) x (0, b)``
- torus: angles ``(u, v)`` in ``[0, 2pi)``
- disk: polar ``(r, theta)`` with ``0 <= r < 1``
- sphere: ``(colatitude, longitude)``
"""


class ModelKind(str, Enum):
    """Supported model geometries."""

    interval = "interval"
    rectangle = "rect"
    square = "square"
    torus = "torus"
    disk = "disk"
    sphere = "sphere"


class BoundaryCondition(str, Enum):
    """Boundary condition imposed on the Laplacian."""

    dirichlet = "dirichlet"
    neumann = "neumann"
    none = "none"


WITH_BOUNDARY = (
    ModelKind.interval,
    ModelKind.rectangle,
    ModelKind.square,
    ModelKind.disk,
)
CLOSED = (ModelKind.torus, ModelKind.sphere)
NEUMANN_CAPABLE = (ModelKind.interval, ModelKind.rectangle, ModelKind.square)


@dataclass(frozen=True)
class ModelGeometry:
    """
    A model geometry with its fixed normalization.

    The rectangle has first side 1 and second side ``b`` with ``0 < b < 1``;
    ``b = 1`` is the separate :attr:`ModelKind.square` kind. The disk has
    radius 1, the torus side ``2pi`` and the sphere radius 1, so only the
    interval length ``a`` and the rectangle aspect ``b`` are free.
    """

    kind: ModelKind
    a: float = 1.0
    """Interval length."""

    b: float = 1.0
    """Rectangle aspect (second side)."""

    b_squared: Optional[Fraction] = None
    """``b**2`` as an exact fraction, or ``None`` when it is irrational."""

    bc: BoundaryCondition = BoundaryCondition.dirichlet
    rational: bool = True
    """
    Whether ``b**2`` is rational.

    When set and ``b_squared`` is not given, ``b`` is read as the decimal it
    prints as. Irrational aspects have only simple eigenvalues.
    """

    def __post_init__(self) -> None:
        """Check the parameter ranges of each kind."""
        if self.kind is ModelKind.interval and not self.a > 0:
            raise ValidationError(
                f"interval length must be positive: {self.a}"
            )
        if self.kind is ModelKind.rectangle:
            if not 0 < self.b < 1:
                raise ValidationError(
                    f"rectangle aspect must satisfy 0 < b < 1: {self.b}"
                )
            if not self.rational:
                object.__setattr__(self, "b_squared", None)
            elif self.b_squared is None:
                object.__setattr__(
                    self, "b_squared", Fraction(repr(float(self.b))) ** 2
                )
        elif self.kind is ModelKind.square:
            object.__setattr__(self, "b", 1.0)
            object.__setattr__(self, "b_squared", Fraction(1))
        if self.kind in CLOSED and self.bc is not BoundaryCondition.none:
            object.__setattr__(self, "bc", BoundaryCondition.none)
        if self.kind in WITH_BOUNDARY and self.bc is BoundaryCondition.none:
            raise ValidationError(
                f"{self.kind.value} needs a boundary condition"
            )
        if (
            self.bc is BoundaryCondition.neumann
            and self.kind not in NEUMANN_CAPABLE
        ):
            raise ValidationError(
                f"Neumann conditions are not available on {self.kind.value}"
            )

    @property
    def dimension(self) -> int:
        """Manifold dimension."""
        return 1 if self.kind is ModelKind.interval else 2

    @property
    def volume(self) -> float:
        """Total Riemannian volume."""
        return {
            ModelKind.interval: self.a,
            ModelKind.rectangle: consts.RECTANGLE_FIRST_SIDE * self.b,
            ModelKind.square: 1.0,
            ModelKind.torus: consts.TORUS_SIDE ** 2,
            ModelKind.disk: math.pi * consts.DISK_RADIUS ** 2,
            ModelKind.sphere: 4 * math.pi * consts.SPHERE_RADIUS ** 2,
        }[self.kind]

    @property
    def is_closed(self) -> bool:
        """Whether the model has no boundary."""
        return self.kind in CLOSED

    @property
    def side(self) -> float:
        """Second side of the rectangle (1 for the square)."""
        return self.b if self.kind is ModelKind.rectangle else 1.0

    @property
    def spec(self) -> str:
        """Render the model as a model-spec string."""
        params = []
        if self.kind is ModelKind.interval:
            params.append(f"a={self.a!r}")
        elif self.kind is ModelKind.rectangle:
            if self.b_squared is None:
                params.append(f"b={self.b!r},rational=no")
            elif self.b_squared == Fraction(repr(float(self.b))) ** 2:
                params.append(f"b={self.b!r}")
            else:
                params.append(f"b2={self.b_squared}")
        if self.bc is BoundaryCondition.neumann:
            params.append("bc=neumann")
        if not params:
            return self.kind.value
        return f"{self.kind.value}:{','.join(params)}"

    def __str__(self) -> str:
        """Build a string representation, for use in logs."""
        return self.spec


Kernel = Callable[[np.ndarray, np.ndarray], np.ndarray]
"""Vectorized eigenspace kernel: point arrays of shape ``(..., d)`` in,
values of shape ``(...)`` out."""


@dataclass(frozen=True, eq=False)
class EigenspaceBlock:
    """
    One distinct frequency with its multiplicity and eigenspace kernel.

    ``frequency`` is the square root of the Laplace eigenvalue
    (``Delta e = -frequency**2 e``). The kernel is
    ``E(x, y) = sum of e_j(x) e_j(y)`` over an orthonormal basis of the
    eigenspace, which does not depend on the basis chosen.
    """

    frequency: float
    multiplicity: int
    kernel: Kernel = field(repr=False)

    def weight(self, x: Any) -> Any:
        """Diagonal of the kernel, the jump of the counting function at x."""
        x = np.asarray(x, dtype=float)
        return self.kernel(x, x)


class OrbitKind(str, Enum):
    """Shape of an isometry orbit."""

    finite = "finite"
    circle = "circle"
    everything = "all"


@dataclass(frozen=True)
class Orbit:
    """Isometry orbit of a point."""

    kind: OrbitKind
    points: Tuple[Point, ...] = field(default_factory=tuple)
    radius: Optional[float] = None
    """Radius of the orbit circle when ``kind`` is ``circle``."""

    def __len__(self) -> int:
        """Number of points in a finite orbit."""
        return len(self.points)
