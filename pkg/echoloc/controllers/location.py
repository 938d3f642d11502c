"""Controller for the locate subcommand."""

import logging
from typing import Optional

from echoloc import config
from echoloc.domain import LocationReport, RunConfig, parse_model_spec
from echoloc.process import locate as locate_target
from echoloc.serialize import load_counting_function

logger = logging.getLogger(__name__)


def locate(
    run: RunConfig,
    target: str,
    grid_resolution: Optional[int] = None,
) -> LocationReport:
    """
    Echolocate the counting function stored at ``target``.

    The model comes from the run, or from the target itself when the run
    names none.
    """
    cf = load_counting_function(target)
    model = parse_model_spec(run.model or cf.model)
    report = locate_target(
        model,
        cf,
        acceptance=run.acceptance_residual,
        generic_acceptance=run.generic_acceptance_residual,
        grid_resolution=grid_resolution or config.GRID_RESOLUTION,
        threads=run.threads,
        frequency_tol=run.frequency_tol,
    )
    logger.debug("%s: %s with %i candidates", target, report.status.value,
                 len(report.candidates))
    return report
