"""Pointwise counting functions, their timbres and their comparison."""

import logging
import math
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from echoloc import config
from echoloc.domain import (
    CountingFunction,
    Jump,
    MatchReport,
    ModelGeometry,
    Timbre,
    TimbreEntry,
)
from echoloc.errors import MismatchedCutoffs, OutOfRange, ValidationError
from echoloc.services.models import get_model, weight_matrix

logger = logging.getLogger(__name__)


def assemble(
    pairs: Iterable[Tuple[float, float]],
    threshold: float = config.SUPPRESSION_THRESHOLD,
) -> Tuple[Tuple[Jump, ...], Tuple[float, ...]]:
    """
    Split ``(frequency, weight)`` pairs into kept jumps and nodal zeros.

    A weight is suppressed when it falls below ``threshold * max(1, mean)``,
    ``mean`` being the running mean of the weights kept so far. Rounding can
    leave tiny negative weights on nodal sets; those are suppressed too.
    """
    jumps: List[Jump] = []
    suppressed: List[float] = []
    kept_total = 0.0
    for frequency, weight in pairs:
        mean = kept_total / len(jumps) if jumps else 0.0
        if weight < threshold * max(1.0, mean):
            suppressed.append(float(frequency))
            continue
        jumps.append(Jump(float(frequency), float(weight)))
        kept_total += weight
    return tuple(jumps), tuple(suppressed)


def counting_function(
    model: ModelGeometry,
    x: Sequence[float],
    cutoff: float,
    threshold: float = config.SUPPRESSION_THRESHOLD,
) -> CountingFunction:
    """
    Build the pointwise counting function ``N_x`` up to ``cutoff``.

    Parameters
    ----------
    model : :class:`.ModelGeometry`
    x : sequence of floats
        A point of the model chart.
    cutoff : float
        Largest frequency to enumerate.
    threshold : float
        Relative size below which a jump counts as a nodal zero.

    Returns
    -------
    :class:`.CountingFunction`

    Raises
    ------
    :class:`.InvalidPoint`
        If ``x`` is not a point of the model.
    :class:`.CapacityExceeded`
        If the enumeration would exceed the block budget.
    """
    spectral = get_model(model)
    point = spectral.check_point(x)
    blocks = spectral.enumerate_blocks(cutoff)
    weights = weight_matrix(blocks, np.array([point]))[:, 0]
    jumps, suppressed = assemble(
        zip((block.frequency for block in blocks), weights), threshold
    )
    logger.debug("%s at %s: %i jumps, %i suppressed up to %s", model, point,
                 len(jumps), len(suppressed), cutoff)
    return CountingFunction(
        jumps=jumps,
        cutoff=float(cutoff),
        model=model.spec,
        point=point,
        suppressed=suppressed,
    )


def two_point_counting(
    model: ModelGeometry,
    x: Sequence[float],
    y: Sequence[float],
    cutoff: float,
    threshold: float = config.SUPPRESSION_THRESHOLD,
) -> CountingFunction:
    """
    Counting function of the two-point sum ``E(x,x) + E(y,y) + 2 E(x,y)``.

    The jump at each frequency is the squared norm of the projection of
    ``delta_x + delta_y``, hence nonnegative.
    """
    spectral = get_model(model)
    p = spectral.check_point(x)
    q = spectral.check_point(y)
    blocks = spectral.enumerate_blocks(cutoff)
    px, qy = np.array(p), np.array(q)
    pairs = [
        (
            block.frequency,
            float(block.kernel(px, px) + block.kernel(qy, qy)
                  + 2 * block.kernel(px, qy)),
        )
        for block in blocks
    ]
    jumps, suppressed = assemble(pairs, threshold)
    return CountingFunction(
        jumps=jumps,
        cutoff=float(cutoff),
        model=model.spec,
        point=p,
        second_point=q,
        suppressed=suppressed,
    )


def evaluate(cf: CountingFunction, frequency: float) -> float:
    """
    Evaluate ``N_x(frequency)``, right-continuous at every jump.

    Raises
    ------
    :class:`.OutOfRange`
        If ``frequency`` lies beyond the cutoff of an incomplete function.
    """
    if frequency > cf.cutoff and not cf.complete:
        raise OutOfRange(
            f"N_x({frequency}) is unknown beyond the cutoff {cf.cutoff}"
        )
    if not cf.jumps:
        return 0.0
    index = int(np.searchsorted(cf.frequencies, frequency, side="right"))
    return float(np.sum(cf.weights[:index]))


def timbre(cf: CountingFunction) -> Timbre:
    """Amplitudes ``sqrt(w)`` of the kept jumps."""
    return Timbre(
        entries=tuple(
            TimbreEntry(jump.frequency, math.sqrt(jump.weight))
            for jump in cf.jumps
        ),
        model=cf.model,
        point=cf.point,
    )


def compare(
    first: CountingFunction,
    second: CountingFunction,
    frequency_tol: float = config.FREQUENCY_TOL,
    weight_tol: float = config.WEIGHT_TOL,
) -> MatchReport:
    """
    Decide whether two counting functions agree jump by jump.

    Frequencies match within ``frequency_tol``; matched weights must agree
    within ``weight_tol``. A jump present on one side only is a discrepancy
    unless its weight is itself within ``weight_tol`` of zero.

    Raises
    ------
    :class:`.MismatchedCutoffs`
        If the two functions were built up to different cutoffs.
    """
    if not (first.complete and second.complete) and not math.isclose(
        first.cutoff, second.cutoff, rel_tol=1e-12, abs_tol=0.0
    ):
        raise MismatchedCutoffs(
            f"cutoffs differ: {first.cutoff} and {second.cutoff}"
        )
    i = j = 0
    a, b = first.jumps, second.jumps
    while i < len(a) or j < len(b):
        if i < len(a) and j < len(b) \
                and abs(a[i].frequency - b[j].frequency) <= frequency_tol:
            difference = abs(a[i].weight - b[j].weight)
            if difference > weight_tol:
                return MatchReport(False, a[i].frequency, difference)
            i += 1
            j += 1
            continue
        if j >= len(b) or (i < len(a) and a[i].frequency < b[j].frequency):
            lone, i = a[i], i + 1
        else:
            lone, j = b[j], j + 1
        if lone.weight > weight_tol:
            return MatchReport(False, lone.frequency, lone.weight, True)
    return MatchReport(True)


def check_positive(name: str, value: float) -> float:
    """Validate a strictly positive parameter."""
    if not value > 0 or not math.isfinite(value):
        raise ValidationError(f"{name} must be positive: {value}")
    return float(value)
