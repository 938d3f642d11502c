"""
Closed-form echolocation on the separable models.

Each inversion reads a point back from the first one or two jumps of its
counting function and returns the whole isometry orbit. Reports carry the
residual of the forward signature so that callers can reject near misses.
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from echoloc import config
from echoloc.domain import (
    Candidate,
    CountingFunction,
    LocationReport,
    LocationStatus,
    ModelGeometry,
    ModelKind,
    Point,
)
from echoloc.errors import (
    EmptyInput,
    InfeasibleSignature,
    UnsupportedModel,
    ValidationError,
)
from echoloc.services.models import get_model, weight_matrix

from .counting import check_positive

logger = logging.getLogger(__name__)

SLACK = 1e-12
"""Rounding allowance on feasibility bounds."""


def _clamp_unit(value: float, what: str) -> float:
    """Clamp ``value`` into ``(0, 1]`` within rounding, or refuse."""
    if value > 1 + SLACK or value <= 0:
        raise InfeasibleSignature(f"{what} = {value} is not in (0, 1]")
    return min(value, 1.0)


def locate_on_interval(a: float, weight: float) -> Tuple[Point, ...]:
    """
    Points of the Dirichlet string ``[0, a]`` whose first jump is ``weight``.

    The first jump is ``(2/a) sin(pi x / a)**2``, so
    ``x = (a / pi) arcsin(sqrt(a w / 2))`` and its mirror image ``a - x``.
    """
    check_positive("a", a)
    check_positive("weight", weight)
    s = _clamp_unit(a * weight / 2, "a w / 2")
    x = a / math.pi * math.asin(math.sqrt(s))
    if abs(a - 2 * x) <= SLACK * a:
        return ((a / 2,),)
    return ((x,), (a - x,))


def infer_interval_length(cf: CountingFunction) -> float:
    """Length of a Dirichlet string from its first frequency ``pi / a``."""
    if not cf.jumps:
        raise EmptyInput("no jumps to read the interval length from")
    return math.pi / cf.jumps[0].frequency


def locate_on_unknown_interval(
    cf: CountingFunction,
) -> Tuple[float, Tuple[Point, ...]]:
    """Recover both the string length and the point."""
    a = infer_interval_length(cf)
    return a, locate_on_interval(a, cf.jumps[0].weight)


def _first_blocks(geometry: ModelGeometry, count: int) -> List[float]:
    """The lowest ``count`` frequencies of ``geometry``."""
    spectral = get_model(geometry)
    cutoff = 4 * math.pi
    blocks = spectral.enumerate_blocks(cutoff)
    while len(blocks) < count:
        cutoff *= 2
        blocks = spectral.enumerate_blocks(cutoff)
    return [block.frequency for block in blocks[:count]]


def forward_residual(
    geometry: ModelGeometry,
    point: Point,
    signature: Sequence[Tuple[float, float]],
) -> float:
    """
    Euclidean distance between the jumps of ``point`` and ``signature``.

    ``signature`` lists ``(frequency, weight)`` pairs; each frequency must be
    a frequency of the model.
    """
    spectral = get_model(geometry)
    top = max(f for f, _ in signature)
    blocks = spectral.enumerate_blocks(top * (1 + 1e-9) + 1e-9)
    chosen = [
        min(blocks, key=lambda block: abs(block.frequency - frequency))
        for frequency, _ in signature
    ]
    weights = weight_matrix(chosen, np.array([point]))[:, 0]
    target = np.array([w for _, w in signature], dtype=float)
    return float(np.sqrt(np.sum((weights - target) ** 2)))


def orbit_report(
    geometry: ModelGeometry,
    representative: Point,
    residual: float,
    acceptance: float,
) -> LocationReport:
    """Report the orbit of ``representative`` if it fits well enough."""
    if not residual <= acceptance:
        logger.debug("%s: closed form residual %s is too large", geometry,
                     residual)
        return LocationReport(LocationStatus.no_match, model=geometry.spec)
    spectral = get_model(geometry)
    images = sorted(spectral.isometry_orbit(representative).points)
    return LocationReport(
        LocationStatus.unique_orbit,
        (tuple(Candidate(image, residual) for image in images),),
        geometry.spec,
    )


def rectangle_point(b: float, jump11: float, jump21: float) -> Point:
    """
    Representative point of the rectangle ``(0, 1) x (0, b)``, ``b < 1``.

    The two lowest jumps are ``(4/b) sin(pi x)**2 sin(pi y / b)**2`` and
    ``(4/b) sin(2 pi x)**2 sin(pi y / b)**2``; their ratio is
    ``4 cos(pi x)**2``, which fixes ``x`` up to reflection, and the first
    jump then fixes ``y``.
    """
    check_positive("jump11", jump11)
    if jump21 < 0:
        raise InfeasibleSignature(f"negative jump {jump21}")
    ratio = jump21 / jump11
    if ratio >= 4 * (1 - SLACK):
        raise InfeasibleSignature(
            f"jump ratio {ratio} needs cos(pi x)**2 >= 1 (boundary)"
        )
    cos2 = ratio / 4
    x = math.acos(math.sqrt(cos2)) / math.pi
    sin2_y = _clamp_unit(jump11 * b / (4 * (1 - cos2)), "sin(pi y / b)**2")
    return (x, b / math.pi * math.asin(math.sqrt(sin2_y)))


def locate_on_rectangle(
    b: float,
    jump11: float,
    jump21: float,
    acceptance: float = config.ACCEPTANCE_RESIDUAL,
) -> LocationReport:
    """Orbit of the rectangle point with the two given lowest jumps."""
    geometry = ModelGeometry(ModelKind.rectangle, b=b)
    point = rectangle_point(b, jump11, jump21)
    first, second = _first_blocks(geometry, 2)
    residual = forward_residual(
        geometry, point, [(first, jump11), (second, jump21)]
    )
    return orbit_report(geometry, point, residual, acceptance)


def square_point(jump11: float, jump2: float) -> Point:
    """
    Representative point of the unit square from its two lowest jumps.

    With ``u = sin(pi x)**2`` and ``v = sin(pi y)**2`` the first jump is
    ``4 u v`` and the doubly degenerate second jump is
    ``16 u v (2 - u - v)``. So ``u`` and ``v`` are the roots of
    ``z**2 - S z + P`` with ``P = jump11 / 4`` and
    ``S = 2 - jump2 / (4 jump11)``; swapping them is a diagonal reflection.
    """
    check_positive("jump11", jump11)
    if jump2 < 0:
        raise InfeasibleSignature(f"negative jump {jump2}")
    product = jump11 / 4
    total = 2 - jump2 / (4 * jump11)
    discriminant = total * total - 4 * product
    if discriminant < -SLACK:
        raise InfeasibleSignature(
            f"no real sines for P={product}, S={total}"
        )
    root = math.sqrt(max(discriminant, 0.0))
    u = _clamp_unit((total - root) / 2, "sin(pi x)**2")
    v = _clamp_unit((total + root) / 2, "sin(pi y)**2")
    return (
        math.asin(math.sqrt(u)) / math.pi,
        math.asin(math.sqrt(v)) / math.pi,
    )


def locate_on_square(
    jump11: float,
    jump2: float,
    acceptance: float = config.ACCEPTANCE_RESIDUAL,
) -> LocationReport:
    """Orbit of the square point with the two given lowest jumps."""
    geometry = ModelGeometry(ModelKind.square)
    point = square_point(jump11, jump2)
    first, second = _first_blocks(geometry, 2)
    residual = forward_residual(
        geometry, point, [(first, jump11), (second, jump2)]
    )
    return orbit_report(geometry, point, residual, acceptance)


def ellipsoid_gaussian_curvature(z: float, a: float) -> float:
    """
    Gaussian curvature of the spheroid ``x**2 + y**2 + z**2 / a**2 = 1``.

    At height ``z`` it is ``a**2 / (a**2 - z**2 (1 - a**-2))**2``, from
    ``1 / a**2`` on the equator to ``a**2`` at the poles.
    """
    check_positive("a", a)
    if abs(z) > a * (1 + SLACK):
        raise ValidationError(f"|z| = {abs(z)} exceeds the semi-axis {a}")
    return a * a / (a * a - z * z * (1 - a ** -2)) ** 2


def ellipsoid_z_from_curvature(K: float, a: float) -> Tuple[float, ...]:
    """
    Heights on the spheroid where the Gaussian curvature equals ``K``.

    Rotations about the axis and the reflection ``z -> -z`` are the
    isometries, so the answer is ``{z, -z}``.
    """
    check_positive("a", a)
    check_positive("K", K)
    if a == 1:
        raise UnsupportedModel("the round sphere has constant curvature")
    z2 = (a * a - a / math.sqrt(K)) / (1 - a ** -2)
    if z2 < -SLACK * a * a or z2 > a * a * (1 + SLACK):
        raise InfeasibleSignature(
            f"curvature {K} is not attained on the spheroid a={a}"
        )
    z = math.sqrt(min(max(z2, 0.0), a * a))
    return (z,) if z == 0 else (-z, z)


def disk_radius_from_looping_time(t: float) -> float:
    """
    Radius of a point of the unit disk from its shortest looping time.

    The shortest geodesic loop through a point at radius ``r`` bounces
    straight off the nearest wall and has length ``2 (1 - r)``.
    """
    if not 0 < t < 2:
        raise InfeasibleSignature(
            f"looping time {t} is not in (0, 2) for the unit disk"
        )
    return 1 - t / 2
