"""Controllers for the heat, curvature and wave subcommands."""

import logging
from typing import List, Optional, Sequence

from echoloc import config
from echoloc.domain import (
    CurvatureEstimate,
    HeatTraceResult,
    RunConfig,
    WaveTrace,
)
from echoloc.errors import ValidationError
from echoloc.process import (
    curvature_estimate,
    detect_looping_times,
    heat_trace,
    smoothed_wave_trace,
)

from .util import counting_source, require_model, require_point, time_grid

logger = logging.getLogger(__name__)

DEFAULT_SCHEDULE = (1e-2, 5e-3, 2.5e-3)


def heat(
    run: RunConfig,
    times: Sequence[float],
    half_laplacian: bool = False,
    target: Optional[str] = None,
) -> List[HeatTraceResult]:
    """Heat traces at each of ``times``."""
    if not times:
        raise ValidationError("heat needs at least one --t")
    cf = counting_source(run, target)
    return [heat_trace(cf, t, half_laplacian) for t in times]


def curvature(
    run: RunConfig, schedule: Sequence[float] = DEFAULT_SCHEDULE
) -> CurvatureEstimate:
    """
    Scalar curvature at the run's point.

    The run's cutoff is used when set; otherwise one is chosen that controls
    the heat tail at the shortest time.
    """
    estimate = curvature_estimate(require_model(run), require_point(run),
                                  schedule or DEFAULT_SCHEDULE, run.cutoff)
    logger.debug("curvature %s with cutoff %s", estimate.scalar_curvature,
                 estimate.cutoff)
    return estimate


def wave(
    run: RunConfig,
    t_min: float,
    t_max: float,
    step: float,
    sigma: Optional[float] = None,
    threshold: float = config.LOOPING_THRESHOLD,
    target: Optional[str] = None,
) -> WaveTrace:
    """Smoothed wave trace on a time grid and the looping times it shows."""
    cf = counting_source(run, target)
    samples = smoothed_wave_trace(cf, time_grid(t_min, t_max, step), sigma,
                                  run.threads)
    looping = detect_looping_times(samples, threshold)
    return WaveTrace(tuple(samples), samples[0].sigma, tuple(looping))
