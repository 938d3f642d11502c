"""
CSV serializers.

Every table has a header row. Floats carry 17 significant digits, like the
JSON artifacts.
"""

import csv
import io
from typing import Any, Iterable, List, Sequence, Tuple

from echoloc import consts
from echoloc.domain import (
    CountingFunction,
    CurvatureEstimate,
    EigenspaceBlock,
    FailureReport,
    HeatTraceResult,
    LocationReport,
    MatchReport,
    RecoveredCount,
    Timbre,
    WaveTrace,
)
from echoloc.serialize.base import BaseSerializer

Table = Tuple[Sequence[str], Iterable[Sequence[Any]]]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, consts.FLOAT_FORMAT)
    return str(value)


class CSVSerializer(BaseSerializer):
    """Serializes domain results as comma-separated tables."""

    extension = consts.CSV

    def table(self, payload: Any) -> Table:
        """Header and rows for ``payload``."""
        items = list(payload) if isinstance(payload, (list, tuple)) \
            else [payload]
        first = items[0] if items else None
        if isinstance(first, CountingFunction):
            return ("lambda", "weight"), [
                (j.frequency, j.weight) for cf in items for j in cf.jumps
            ]
        if isinstance(first, Timbre):
            return ("lambda", "amplitude"), [
                (e.frequency, e.amplitude) for t in items for e in t.entries
            ]
        if isinstance(first, HeatTraceResult):
            return ("t", "value", "tail_bound"), [
                (r.t, r.value, r.tail_bound) for r in items
            ]
        if isinstance(first, WaveTrace):
            return ("t", "value"), [
                (s.t, s.value) for trace in items for s in trace.samples
            ]
        if isinstance(first, CurvatureEstimate):
            # The extrapolated value is the row at t = 0.
            return ("t", "value"), [
                row for e in items
                for row in [(0.0, e.scalar_curvature), *e.samples]
            ]
        if isinstance(first, EigenspaceBlock):
            return ("lambda", "multiplicity"), [
                (b.frequency, b.multiplicity) for b in items
            ]
        if isinstance(first, RecoveredCount):
            return ("lambda", "value", "band"), [
                (r.frequency, r.value, r.band) for r in items
            ]
        if isinstance(first, LocationReport):
            return self._location_table(items)
        if isinstance(first, FailureReport):
            return ("graph6", "u", "v"), [
                (r.graph6, u, v) for r in items for u, v in r.pairs
            ]
        if isinstance(first, MatchReport):
            return ("equal", "frequency", "difference",
                    "frequency_mismatch"), [
                (r.equal, r.frequency, r.difference, r.frequency_mismatch)
                for r in items
            ]
        if first is None:
            return ("lambda", "weight"), []
        raise TypeError(f"cannot serialize {type(first).__name__}")

    @staticmethod
    def _location_table(reports: List[LocationReport]) -> Table:
        width = max((len(c.point) for r in reports for c in r.candidates),
                    default=0)
        header = ("status", "orbit", "residual") \
            + tuple(f"x{i}" for i in range(width))
        rows = [
            (report.status.value, index, candidate.residual,
             *candidate.point)
            for report in reports
            for index, orbit in enumerate(report.orbits)
            for candidate in orbit
        ]
        return header, rows

    def serialize(self, payload: Any) -> str:
        """Render ``payload`` as a CSV table."""
        header, rows = self.table(payload)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value) for value in row])
        return buffer.getvalue()


def as_csv(payload: Any) -> str:
    """Serialize a domain result as CSV."""
    return CSVSerializer().serialize(payload)
