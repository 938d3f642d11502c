"""Helpers shared by the controllers."""

from typing import Optional, Sequence

import numpy as np

from echoloc.domain import (
    CountingFunction,
    ModelGeometry,
    Point,
    RunConfig,
    parse_model_spec,
)
from echoloc.errors import ValidationError
from echoloc.process import counting_function
from echoloc.serialize import load_counting_function


def require_model(run: RunConfig) -> ModelGeometry:
    """Model geometry of the run."""
    if not run.model:
        raise ValidationError(f"{run.subcommand} needs --model")
    return parse_model_spec(run.model)


def require_point(run: RunConfig) -> Point:
    """Point of the run."""
    if not run.point:
        raise ValidationError(f"{run.subcommand} needs --point")
    return run.point


def require_cutoff(run: RunConfig) -> float:
    """Cutoff of the run."""
    if run.cutoff is None:
        raise ValidationError(f"{run.subcommand} needs --cutoff")
    return run.cutoff


def counting_source(
    run: RunConfig, target: Optional[str] = None
) -> CountingFunction:
    """
    The counting function a transform works on.

    Read from ``target`` when given, otherwise computed from the model, point
    and cutoff of the run.
    """
    if target:
        return load_counting_function(target)
    return counting_function(require_model(run), require_point(run),
                             require_cutoff(run))


def time_grid(start: float, stop: float, step: float) -> Sequence[float]:
    """Uniform grid ``start, start + step, ..`` up to ``stop``."""
    if not step > 0:
        raise ValidationError(f"time step must be positive: {step}")
    if stop < start:
        raise ValidationError(f"empty time range {start}..{stop}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return list(start + step * np.arange(count))
