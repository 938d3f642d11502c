"""
Transforms of pointwise counting functions.

Heat traces recover local curvature, smoothed wave traces expose the lengths
of geodesic loops through the point, and the quantum energy distribution is
the normalized counting function.
"""

import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial
from scipy.optimize import brentq
from scipy.signal import find_peaks
from scipy.special import log_ndtr

from echoloc import config
from echoloc.domain import (
    CountingFunction,
    CurvatureEstimate,
    HeatTraceResult,
    ModelGeometry,
    RecoveredCount,
    WaveTraceSample,
    parse_model_spec,
)
from echoloc.errors import (
    DegenerateNormalization,
    EmptyInput,
    NotInSpectrum,
    OutOfRange,
    TailNotControlled,
    UnsupportedModel,
    ValidationError,
    WindowUnresolved,
)
from echoloc.services.models import get_model
from echoloc.utils import ordered_map

from .counting import check_positive, counting_function, evaluate

logger = logging.getLogger(__name__)

WAVE_CHUNK = 256
"""Times evaluated per worker task."""


def ball_volume(dimension: int) -> float:
    """Volume of the unit ball in ``R^d``."""
    return math.pi ** (dimension / 2) / math.gamma(dimension / 2 + 1)


def weyl_constant(dimension: int) -> float:
    """Leading coefficient of the pointwise Weyl law ``N_x ~ c Lambda^d``."""
    return ball_volume(dimension) / (2 * math.pi) ** dimension


def _log_heat_tail(
    dimension: int, volume: float, rate: float, cutoff: float
) -> float:
    """
    Log of the heat tail majorant beyond ``cutoff``.

    The jumps of ``N_x`` have density at most
    ``C lambda**(d-1)`` with ``C = safety * d * weyl_constant * max(1, vol)``.
    """
    constant = config.WEYL_SAFETY_FACTOR * dimension \
        * weyl_constant(dimension) * max(1.0, volume)
    if dimension == 1:
        # int_L^inf exp(-c l^2) dl = sqrt(pi/c) / 2 * erfc(sqrt(c) L)
        log_erfc = math.log(2.0) + float(
            log_ndtr(-math.sqrt(2 * rate) * cutoff)
        )
        return math.log(constant * 0.5 * math.sqrt(math.pi / rate)) \
            + log_erfc
    if dimension == 2:
        return math.log(constant / (2 * rate)) - rate * cutoff * cutoff
    raise UnsupportedModel(f"no heat tail bound in dimension {dimension}")


def heat_tail_bound(
    dimension: int, volume: float, t: float, cutoff: float,
    half_laplacian: bool = False,
) -> float:
    """Majorant of the heat trace contributions beyond ``cutoff``."""
    rate = t / 2 if half_laplacian else t
    return math.exp(_log_heat_tail(dimension, volume, rate, cutoff))


def minimal_heat_cutoff(
    dimension: int, volume: float, t: float, target: float,
    half_laplacian: bool = False,
) -> float:
    """Smallest cutoff whose heat tail majorant is at most ``target``."""
    rate = t / 2 if half_laplacian else t
    log_target = math.log(target)

    def excess(cutoff: float) -> float:
        return _log_heat_tail(dimension, volume, rate, cutoff) - log_target

    low = 1e-9
    if excess(low) <= 0:
        return low
    high = max(1.0, 1.0 / math.sqrt(rate))
    while excess(high) > 0:
        high *= 2
    return float(brentq(excess, low, high, xtol=1e-9))


def _geometry_of(cf: CountingFunction) -> ModelGeometry:
    try:
        return parse_model_spec(cf.model)
    except ValidationError as e:
        raise UnsupportedModel(
            f"cannot bound the tail of {cf.model!r}: {e.message}"
        )


def heat_trace(
    cf: CountingFunction, t: float, half_laplacian: bool = False
) -> HeatTraceResult:
    """
    Pointwise heat trace ``sum exp(-t lambda**2) w`` of a counting function.

    With ``half_laplacian`` the exponent is ``t lambda**2 / 2``.

    Raises
    ------
    :class:`.TailNotControlled`
        If the tail majorant beyond the cutoff exceeds
        ``HEAT_TAIL_RATIO * value``. The error carries the smallest cutoff
        that would control it.
    """
    check_positive("t", t)
    if not cf.jumps and not cf.suppressed:
        raise EmptyInput("heat trace of an empty counting function")
    rate = t / 2 if half_laplacian else t
    value = float(np.sum(np.exp(-rate * cf.frequencies ** 2) * cf.weights))
    if cf.complete:
        return HeatTraceResult(value, 0.0, t, half_laplacian)
    geometry = _geometry_of(cf)
    tail = heat_tail_bound(
        geometry.dimension, geometry.volume, t, cf.cutoff, half_laplacian
    )
    if not tail <= config.HEAT_TAIL_RATIO * value:
        needed = minimal_heat_cutoff(
            geometry.dimension, geometry.volume, t,
            config.HEAT_TAIL_RATIO * value if value > 0
            else config.HEAT_TAIL_RATIO,
            half_laplacian,
        )
        raise TailNotControlled(
            f"tail bound {tail:.3g} at t={t} exceeds the tolerance for value "
            f"{value:.3g}; raise the cutoff to at least {needed:.6g}",
            needed,
        )
    return HeatTraceResult(value, tail, t, half_laplacian)


def curvature_cutoff(geometry: ModelGeometry, t: float) -> float:
    """Cutoff that controls the heat tail at time ``t`` with some room."""
    leading = (4 * math.pi * t) ** (-geometry.dimension / 2)
    needed = minimal_heat_cutoff(
        geometry.dimension, geometry.volume, t,
        0.5 * config.HEAT_TAIL_RATIO * leading,
    )
    return 1.05 * needed + 1.0


def curvature_estimate(
    model: ModelGeometry,
    x: Sequence[float],
    schedule: Sequence[float],
    cutoff: Optional[float] = None,
) -> CurvatureEstimate:
    """
    Extrapolate the scalar curvature at ``x`` from short-time heat traces.

    On a closed manifold ``(4 pi t)**(d/2) H(t) = 1 + t Scal / 6 + O(t**2)``,
    so ``6 ((4 pi t)**(d/2) H(t) - 1) / t`` tends to ``Scal``. The samples
    are fit by the polynomial through all of them and read off at ``t = 0``.
    """
    if not model.is_closed:
        raise UnsupportedModel(
            f"curvature from heat traces needs a closed model, not {model}"
        )
    times = sorted({check_positive("t", t) for t in schedule}, reverse=True)
    if len(times) < 2:
        raise ValidationError("the time schedule needs two distinct times")
    if cutoff is None:
        cutoff = curvature_cutoff(model, times[-1])
    cf = counting_function(model, x, cutoff)
    d = model.dimension
    samples: List[Tuple[float, float]] = []
    for t in times:
        result = heat_trace(cf, t)
        samples.append(
            (t, 6 * ((4 * math.pi * t) ** (d / 2) * result.value - 1) / t)
        )
    ts, values = zip(*samples)
    coefficients = polynomial.polyfit(ts, values, len(ts) - 1)
    scalar = float(coefficients[0])
    logger.debug("%s at %s: scalar curvature %s from %s", model, cf.point,
                 scalar, samples)
    return CurvatureEstimate(scalar, tuple(samples), float(cutoff))


def estimate_scalar_curvature(
    model: ModelGeometry,
    x: Sequence[float],
    schedule: Sequence[float],
    cutoff: Optional[float] = None,
) -> float:
    """Scalar curvature at ``x``; see :func:`curvature_estimate`."""
    return curvature_estimate(model, x, schedule, cutoff).scalar_curvature


def estimate_gaussian_curvature(
    model: ModelGeometry,
    x: Sequence[float],
    schedule: Sequence[float],
    cutoff: Optional[float] = None,
) -> float:
    """Gaussian curvature of a surface, half its scalar curvature."""
    if model.dimension != 2:
        raise UnsupportedModel(f"{model} is not a surface")
    return curvature_estimate(model, x, schedule, cutoff).gaussian_curvature


def smoothed_wave_trace(
    cf: CountingFunction,
    times: Sequence[float],
    sigma: Optional[float] = None,
    threads: Optional[int] = None,
) -> List[WaveTraceSample]:
    """
    Gaussian-smoothed wave trace ``sum w cos(t lambda) exp(-lambda**2 /
    (2 sigma**2))``.

    ``sigma`` defaults to ``cutoff / WAVE_WINDOW_RATIO`` and may not exceed
    it, so that the window has decayed by the cutoff. Output does not depend
    on ``threads``.
    """
    limit = cf.cutoff / config.WAVE_WINDOW_RATIO
    if sigma is None:
        sigma = limit
    check_positive("sigma", sigma)
    if not cf.complete and sigma > limit * (1 + 1e-12):
        raise WindowUnresolved(
            f"sigma={sigma} exceeds cutoff/{config.WAVE_WINDOW_RATIO:g}"
            f"={limit}"
        )
    grid = np.asarray(times, dtype=float)
    if grid.size == 0:
        return []
    frequencies = cf.frequencies
    damped = cf.weights * np.exp(-frequencies ** 2 / (2 * sigma * sigma))

    def chunk(start: int) -> np.ndarray:
        part = grid[start:start + WAVE_CHUNK]
        return (np.cos(np.outer(part, frequencies)) * damped).sum(axis=1)

    values = np.concatenate(list(
        ordered_map(chunk, range(0, grid.size, WAVE_CHUNK), threads)
    ))
    return [
        WaveTraceSample(float(t), float(v), float(sigma))
        for t, v in zip(grid, values)
    ]


def detect_looping_times(
    samples: Sequence[WaveTraceSample],
    threshold: float = config.LOOPING_THRESHOLD,
) -> List[float]:
    """
    Times of the prominent peaks of ``|wave trace|``.

    Peaks below ``threshold * max|value|`` are dropped; the rest are refined
    by a parabola through the three samples around each peak.

    Raises
    ------
    :class:`.EmptyInput`
        If there are no samples.
    :class:`.ValidationError`
        If the sample times are not uniformly spaced.
    """
    if not samples:
        raise EmptyInput("no wave trace samples")
    times = np.array([s.t for s in samples], dtype=float)
    amplitude = np.abs(np.array([s.value for s in samples], dtype=float))
    if len(times) < 3:
        return []
    steps = np.diff(times)
    step = float(steps[0])
    if not step > 0 or not np.allclose(steps, step, rtol=1e-6, atol=0.0):
        raise ValidationError("wave trace samples must be uniformly spaced")
    top = float(amplitude.max())
    if top == 0:
        return []
    peaks, _ = find_peaks(amplitude, height=threshold * top)
    found = []
    for i in peaks:
        left, mid, right = amplitude[i - 1], amplitude[i], amplitude[i + 1]
        curvature = left - 2 * mid + right
        offset = 0.5 * (left - right) / curvature if curvature != 0 else 0.0
        found.append(float(times[i] + offset * step))
    return sorted(found)


def quantum_energy_cdf(
    cf: CountingFunction, frequency: float, cutoff: Optional[float] = None
) -> float:
    """
    Fraction ``N_x(frequency) / N_x(cutoff)`` of the energy up to the cutoff.

    Raises
    ------
    :class:`.DegenerateNormalization`
        If ``N_x(cutoff)`` vanishes.
    """
    if cutoff is None:
        cutoff = cf.cutoff
    check_positive("cutoff", cutoff)
    if frequency > cutoff:
        raise OutOfRange(f"{frequency} lies beyond the cutoff {cutoff}")
    if frequency < 0:
        raise ValidationError(f"frequency must be nonnegative: {frequency}")
    total = evaluate(cf, cutoff)
    if total == 0:
        raise DegenerateNormalization(f"N_x({cutoff}) vanishes")
    return evaluate(cf, frequency) / total


def recover_counting_from_cdf(
    cdf: Callable[[float], float],
    cutoff: float,
    dimension: int,
    frequencies: Sequence[float],
) -> List[RecoveredCount]:
    """
    Rebuild ``N_x`` from its normalized distribution and the Weyl law.

    ``N_x(lambda) ~ weyl_constant * cdf(lambda) * cutoff**d``; the band is
    the matching ``cutoff**(d - 1)`` remainder term.
    """
    check_positive("cutoff", cutoff)
    constant = weyl_constant(dimension)
    recovered = []
    for frequency in frequencies:
        fraction = cdf(frequency)
        recovered.append(
            RecoveredCount(
                float(frequency),
                constant * fraction * cutoff ** dimension,
                constant * fraction * dimension * cutoff ** (dimension - 1),
            )
        )
    return recovered


def eigenspace_density(
    model: ModelGeometry,
    frequency: float,
    x: Sequence[float],
    tol: float = config.FREQUENCY_TOL,
) -> float:
    """
    Average density ``w / multiplicity`` of the eigenspace at ``frequency``.

    Raises
    ------
    :class:`.NotInSpectrum`
        If no eigenvalue of the model lies within ``tol`` of ``frequency``.
    """
    if frequency < 0:
        raise ValidationError(f"frequency must be nonnegative: {frequency}")
    spectral = get_model(model)
    point = spectral.check_point(x)
    slack = tol * max(1.0, frequency)
    for block in spectral.enumerate_blocks(frequency + slack):
        if abs(block.frequency - frequency) <= slack:
            return float(block.weight(np.array(point))) / block.multiplicity
    raise NotInSpectrum(f"{frequency} is not a frequency of {model}")
