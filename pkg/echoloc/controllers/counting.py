"""Controllers for the spectrum, count, timbre and kuznecov2 subcommands."""

import logging
from typing import List, Sequence

from echoloc.domain import CountingFunction, EigenspaceBlock, \
    MatchReport, RunConfig, Timbre
from echoloc.errors import ValidationError
from echoloc.process import compare, counting_function, \
    timbre as timbre_of, two_point_counting
from echoloc.serialize import load_counting_function
from echoloc.services.models import enumerate_blocks

from .util import require_cutoff, require_model, require_point

logger = logging.getLogger(__name__)


def spectrum(run: RunConfig) -> List[EigenspaceBlock]:
    """Distinct frequencies of the model up to the cutoff."""
    blocks = enumerate_blocks(require_model(run), require_cutoff(run))
    logger.debug("%i blocks up to %s", len(blocks), run.cutoff)
    return blocks


def count(run: RunConfig) -> CountingFunction:
    """Pointwise counting function of the run's point."""
    return counting_function(require_model(run), require_point(run),
                             require_cutoff(run))


def compare_to(run: RunConfig, target: str) -> MatchReport:
    """
    Compare the run's counting function with the one stored at ``target``.

    The cutoff defaults to the target's. Frequencies and weights are
    matched within the run's ``frequency_tol`` and ``weight_tol``.
    """
    other = load_counting_function(target)
    cf = counting_function(require_model(run), require_point(run),
                           run.cutoff or other.cutoff)
    report = compare(cf, other, run.frequency_tol, run.weight_tol)
    logger.debug("%s against %s: equal=%s", run.point, target, report.equal)
    return report


def timbre(run: RunConfig) -> Timbre:
    """Timbre of the run's point."""
    return timbre_of(count(run))


def kuznecov2(
    run: RunConfig, second_point: Sequence[float]
) -> CountingFunction:
    """
    Two-point counting function of the run's point and ``second_point``.

    Parameters
    ----------
    run : :class:`.RunConfig`
    second_point : sequence of float
        The other point, in the same chart.

    Returns
    -------
    :class:`.CountingFunction`
    """
    if not second_point:
        raise ValidationError("kuznecov2 needs --second-point")
    return two_point_counting(require_model(run), require_point(run),
                              tuple(second_point), require_cutoff(run))
