"""
Echolocation: recover a point, up to isometry, from its counting function.

:func:`locate` tries the closed-form inversions first and falls back to
:func:`generic_locate`, a coarse grid scan followed by bounded Nelder-Mead
refinement of the most promising grid minima.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.ndimage import minimum_filter
from scipy.optimize import minimize

from echoloc import config
from echoloc.domain import (
    BoundaryCondition,
    Candidate,
    CountingFunction,
    EigenspaceBlock,
    LocationReport,
    LocationStatus,
    ModelGeometry,
    ModelKind,
    OrbitKind,
    Point,
    Timbre,
)
from echoloc.errors import EmptyInput, InfeasibleSignature, ValidationError
from echoloc.services.models import (
    InvalidPoint,
    SpectralModel,
    get_model,
    weight_matrix,
)
from echoloc.utils import ordered_map

from .inversion import locate_on_interval, rectangle_point, square_point

logger = logging.getLogger(__name__)

Target = Union[CountingFunction, Timbre]
Signature = List[Tuple[float, float]]

MAX_SEEDS = 32
"""Refinements started per run, best grid minima first."""

SCAN_CHUNK = 1024
"""Grid points evaluated per worker task."""


def signature_of(target: Target) -> Tuple[Signature, float]:
    """``(frequency, weight)`` pairs of a target and the cutoff they span."""
    if isinstance(target, Timbre):
        pairs = [(e.frequency, e.amplitude ** 2) for e in target.entries]
        cutoff = max((f for f, _ in pairs), default=0.0)
        return pairs, cutoff * (1 + 1e-12)
    return [(j.frequency, j.weight) for j in target.jumps], target.cutoff


class Matcher:
    """Forward signature distance to a fixed target on one model."""

    def __init__(
        self,
        spectral: SpectralModel,
        target: Target,
        frequency_tol: float = config.FREQUENCY_TOL,
    ) -> None:
        """
        Align the target jumps with the model's eigenspace blocks.

        A target frequency matches a block when they differ by at most
        ``frequency_tol`` times the larger of one and the frequency.
        """
        signature, cutoff = signature_of(target)
        if not signature:
            raise EmptyInput("the target has no jumps")
        self.spectral = spectral
        self.blocks: List[EigenspaceBlock] = spectral.enumerate_blocks(cutoff)
        frequencies = np.array([b.frequency for b in self.blocks])
        self.target = np.zeros(len(self.blocks))
        self.missing: Optional[float] = None
        for frequency, weight in signature:
            index = int(np.argmin(np.abs(frequencies - frequency))) \
                if len(frequencies) else -1
            slack = frequency_tol * max(1.0, frequency)
            if index < 0 or abs(frequencies[index] - frequency) > slack:
                self.missing = frequency
                break
            self.target[index] = weight

    @property
    def compatible(self) -> bool:
        """Whether every target frequency is a model frequency."""
        return self.missing is None

    def weight_of(self, position: int) -> float:
        """Target weight of the block at ``position``."""
        return float(self.target[position])

    def distance(self, points: np.ndarray) -> np.ndarray:
        """Residual at each of the points, shape ``(P,)``."""
        weights = weight_matrix(self.blocks, points)
        return np.sqrt(np.sum((weights - self.target[:, None]) ** 2, axis=0))

    def residual(self, point: Point) -> float:
        """Residual at one point."""
        return float(self.distance(np.array([point]))[0])


def _no_match(model: ModelGeometry) -> LocationReport:
    return LocationReport(LocationStatus.no_match, model=model.spec)


def _orbit_candidates(
    spectral: SpectralModel, point: Point, residual: float
) -> Tuple[Candidate, ...]:
    orbit = spectral.isometry_orbit(point)
    if orbit.kind is OrbitKind.finite:
        images = sorted(orbit.points)
    else:
        images = [spectral.canonical(point)]
    return tuple(Candidate(image, residual) for image in images)


def _seeds(
    matcher: Matcher, grid: np.ndarray, shape: Tuple[int, ...],
    threads: Optional[int],
) -> List[Point]:
    """Grid local minima within ``SEED_RATIO`` of the best, one per orbit."""
    distances = np.concatenate(list(ordered_map(
        lambda start: matcher.distance(grid[start:start + SCAN_CHUNK]),
        range(0, len(grid), SCAN_CHUNK),
        threads,
    )))
    mesh = distances.reshape(shape)
    local = np.flatnonzero(
        (mesh == minimum_filter(mesh, size=3, mode="nearest")).ravel()
    )
    best = float(distances.min())
    ranked = sorted(
        (i for i in local if distances[i] <= config.SEED_RATIO * best),
        key=lambda i: (distances[i], i),
    )
    spans = [hi - lo for lo, hi in matcher.spectral.bounds()[:len(shape)]]
    spacing = min(spans) / max(shape)
    seeds: List[Point] = []
    for i in ranked:
        point = tuple(float(c) for c in grid[i])
        if any(matcher.spectral.same_orbit(point, s, 2 * spacing)
               for s in seeds):
            continue
        seeds.append(point)
        if len(seeds) == MAX_SEEDS:
            break
    logger.debug("%i seeds from %i grid minima (best %.3g)", len(seeds),
                 len(local), best)
    return seeds


def _simplex(
    seed: Point,
    steps: Sequence[float],
    bounds: Sequence[Tuple[float, float]],
) -> np.ndarray:
    """Right-angled simplex of one grid step along each axis, inside bounds."""
    vertices = [np.array(seed, dtype=float)]
    for axis, step in enumerate(steps):
        vertex = np.array(seed, dtype=float)
        _, hi = bounds[axis]
        vertex[axis] += step if vertex[axis] + step <= hi else -step
        vertices.append(vertex)
    return np.array(vertices)


def generic_locate(
    model: ModelGeometry,
    target: Target,
    grid_resolution: int = config.GRID_RESOLUTION,
    refine_steps: int = config.REFINE_STEPS,
    acceptance: float = config.GENERIC_ACCEPTANCE_RESIDUAL,
    threads: Optional[int] = None,
    frequency_tol: float = config.FREQUENCY_TOL,
) -> LocationReport:
    """
    Find every isometry orbit whose counting function matches ``target``.

    Parameters
    ----------
    model : :class:`.ModelGeometry`
    target : :class:`.CountingFunction` or :class:`.Timbre`
        Timbre amplitudes are squared back into weights.
    grid_resolution : int
        Points per axis of the coarse scan.
    refine_steps : int
        Iteration cap of each Nelder-Mead refinement.
    acceptance : float
        Largest residual reported.
    threads : int
        Workers for the scan and the refinements; results do not depend on
        it.
    frequency_tol : float
        Relative slack when matching target frequencies to the model.

    Returns
    -------
    :class:`.LocationReport`
        Orbits sorted by residual, then by canonical coordinates.
    """
    spectral = get_model(model)
    matcher = Matcher(spectral, target, frequency_tol)
    if not matcher.compatible:
        logger.info("%s has no frequency %s", model, matcher.missing)
        return _no_match(model)

    if spectral.homogeneous:
        point = spectral.canonical(tuple(spectral.grid(1)[0]))
        residual = matcher.residual(point)
        if residual > acceptance:
            return _no_match(model)
        return LocationReport(
            LocationStatus.all_points,
            ((Candidate(point, residual),),),
            model.spec,
        )

    grid = spectral.grid(grid_resolution)
    seeds = _seeds(
        matcher, grid, spectral.grid_shape(grid_resolution), threads
    )
    bounds = spectral.bounds()
    steps = [(hi - lo) / grid_resolution for lo, hi in bounds]

    def refine(seed: Point) -> Tuple[Point, float]:
        result = minimize(
            lambda p: matcher.residual(tuple(p)) ** 2,
            np.array(seed),
            method="Nelder-Mead",
            bounds=bounds,
            options={
                "maxiter": refine_steps,
                "xatol": 1e-13,
                "fatol": 1e-30,
                "initial_simplex": _simplex(seed, steps, bounds),
            },
        )
        point = tuple(float(c) for c in result.x)
        return point, matcher.residual(point)

    found: List[Tuple[Point, float]] = []
    for point, residual in ordered_map(refine, seeds, threads):
        if residual > acceptance:
            continue
        try:
            spectral.check_point(point)
        except InvalidPoint:
            continue
        for index, (other, other_residual) in enumerate(found):
            if spectral.same_orbit(point, other):
                if residual < other_residual:
                    found[index] = (point, residual)
                break
        else:
            found.append((point, residual))

    found.sort(key=lambda pair: (pair[1], spectral.canonical(pair[0])))
    orbits = tuple(
        _orbit_candidates(spectral, point, residual)
        for point, residual in found
    )
    if not orbits:
        return _no_match(model)
    status = LocationStatus.unique_orbit if len(orbits) == 1 \
        else LocationStatus.multiple_orbits
    return LocationReport(status, orbits, model.spec)


def _closed_form(model: ModelGeometry, matcher: Matcher) -> Optional[Point]:
    """Closed-form representative for Dirichlet strings and plates."""
    if model.bc is not BoundaryCondition.dirichlet or len(matcher.blocks) < 1:
        return None
    if model.kind is ModelKind.interval:
        return locate_on_interval(model.a, matcher.weight_of(0))[0]
    if len(matcher.blocks) < 2:
        return None
    if model.kind is ModelKind.rectangle:
        return rectangle_point(
            model.b, matcher.weight_of(0), matcher.weight_of(1)
        )
    if model.kind is ModelKind.square:
        return square_point(matcher.weight_of(0), matcher.weight_of(1))
    return None


def locate(
    model: ModelGeometry,
    target: Target,
    acceptance: float = config.ACCEPTANCE_RESIDUAL,
    generic_acceptance: float = config.GENERIC_ACCEPTANCE_RESIDUAL,
    grid_resolution: int = config.GRID_RESOLUTION,
    refine_steps: int = config.REFINE_STEPS,
    threads: Optional[int] = None,
    frequency_tol: float = config.FREQUENCY_TOL,
) -> LocationReport:
    """
    Echolocate ``target`` in ``model``.

    Dirichlet intervals, rectangles and squares are inverted in closed form
    and the whole target is checked against the forward signature; anything
    else, or a closed form that does not fit, goes to
    :func:`generic_locate`.
    """
    spectral = get_model(model)
    matcher = Matcher(spectral, target, frequency_tol)
    if not matcher.compatible:
        logger.info("%s has no frequency %s", model, matcher.missing)
        return _no_match(model)
    try:
        point = _closed_form(model, matcher)
    except (InfeasibleSignature, ValidationError) as e:
        logger.debug("closed form failed on %s: %s", model, e)
        point = None
    if point is not None:
        residual = matcher.residual(point)
        if residual <= acceptance:
            return LocationReport(
                LocationStatus.unique_orbit,
                (_orbit_candidates(spectral, point, residual),),
                model.spec,
            )
        logger.debug("closed form residual %.3g on %s; scanning", residual,
                     model)
    return generic_locate(
        model, target, grid_resolution, refine_steps, generic_acceptance,
        threads, frequency_tol,
    )
