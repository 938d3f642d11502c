"""JSON serializers and loaders for echolocation artifacts."""

import json
import logging
import os
from functools import lru_cache
from typing import Any, Callable, Dict, Type

import jsonschema

from echoloc import config, consts
from echoloc.domain import (
    CountingFunction,
    CountingFunctionRecord,
    CurvatureEstimate,
    EigenspaceBlock,
    FailureRecord,
    FailureReport,
    HeatTraceResult,
    Jump,
    LocationReport,
    LocationReportRecord,
    MatchReport,
    RecoveredCount,
    Timbre,
    WaveTrace,
)
from echoloc.encode import FixedPrecisionJSONEncoder
from echoloc.errors import ValidationError
from echoloc.serialize.base import BaseSerializer

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def load_schema(name: str) -> Dict[str, Any]:
    """Load a JSON schema from the schema directory."""
    path = os.path.join(config.SCHEMA_DIR, f"{name}.json")
    with open(path) as f:
        schema: Dict[str, Any] = json.load(f)
    return schema


def validate(record: Any, name: str) -> None:
    """
    Check ``record`` against the named schema.

    Raises
    ------
    :class:`.ValidationError`
        If the record does not match.
    """
    try:
        jsonschema.validate(record, load_schema(name))
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise ValidationError(f"{name} at {path}: {e.message}") from e


class JSONSerializer(BaseSerializer):
    """Serializes domain results as JSON."""

    extension = consts.JSON

    @staticmethod
    def transform_counting_function(
        cf: CountingFunction,
    ) -> CountingFunctionRecord:
        """Counting function record."""
        record: CountingFunctionRecord = {
            "model": cf.model,
            "point": list(cf.point),
            "cutoff": cf.cutoff,
            "jumps": [{"lambda": j.frequency, "weight": j.weight}
                      for j in cf.jumps],
            "suppressed": list(cf.suppressed),
        }
        if cf.second_point is not None:
            record["second_point"] = list(cf.second_point)
        if cf.complete:
            record["complete"] = True
        return record

    @staticmethod
    def transform_timbre(timbre: Timbre) -> Dict[str, Any]:
        """Timbre record."""
        return {
            "model": timbre.model,
            "point": list(timbre.point),
            "timbre": [{"lambda": e.frequency, "amplitude": e.amplitude}
                       for e in timbre.entries],
        }

    @staticmethod
    def transform_heat_trace(result: HeatTraceResult) -> Dict[str, Any]:
        """Heat trace record."""
        return {
            "t": result.t,
            "value": result.value,
            "tail_bound": result.tail_bound,
            "half_laplacian": result.half_laplacian,
        }

    @staticmethod
    def transform_wave_trace(trace: WaveTrace) -> Dict[str, Any]:
        """Wave trace record with its looping times."""
        return {
            "sigma": trace.sigma,
            "samples": [{"t": s.t, "value": s.value} for s in trace.samples],
            "looping_times": list(trace.looping_times),
        }

    @staticmethod
    def transform_curvature(estimate: CurvatureEstimate) -> Dict[str, Any]:
        """Curvature record with the extrapolated samples."""
        return {
            "scalar_curvature": estimate.scalar_curvature,
            "gaussian_curvature": estimate.gaussian_curvature,
            "cutoff": estimate.cutoff,
            "samples": [{"t": t, "value": v} for t, v in estimate.samples],
        }

    @staticmethod
    def transform_block(block: EigenspaceBlock) -> Dict[str, Any]:
        """Eigenspace block record."""
        return {"lambda": block.frequency, "multiplicity": block.multiplicity}

    @staticmethod
    def transform_recovered(count: RecoveredCount) -> Dict[str, Any]:
        """Recovered count record."""
        return {"lambda": count.frequency, "value": count.value,
                "band": count.band}

    @staticmethod
    def transform_location_report(
        report: LocationReport,
    ) -> LocationReportRecord:
        """Location report record; orbits keep their order."""
        return {
            "model": report.model,
            "status": report.status.value,
            "orbits": [
                [{"point": list(c.point), "residual": c.residual}
                 for c in orbit]
                for orbit in report.orbits
            ],
        }  # type: ignore

    @staticmethod
    def transform_match(report: MatchReport) -> Dict[str, Any]:
        """Comparison record; the discrepancy fields are null when equal."""
        return {
            "equal": report.equal,
            "frequency": report.frequency,
            "difference": report.difference,
            "frequency_mismatch": report.frequency_mismatch,
        }

    @staticmethod
    def transform_failure(report: FailureReport) -> FailureRecord:
        """Graph failure record."""
        return {
            "graph6": report.graph6,
            "pairs": [list(pair) for pair in report.pairs],
            "orbits": [list(orbit) for orbit in report.orbits],
        }

    TRANSFORMS: Dict[Type, str] = {
        CountingFunction: "transform_counting_function",
        Timbre: "transform_timbre",
        HeatTraceResult: "transform_heat_trace",
        WaveTrace: "transform_wave_trace",
        CurvatureEstimate: "transform_curvature",
        EigenspaceBlock: "transform_block",
        RecoveredCount: "transform_recovered",
        LocationReport: "transform_location_report",
        FailureReport: "transform_failure",
        MatchReport: "transform_match",
    }

    def transform(self, payload: Any) -> Any:
        """Record for a domain object, or a list of records."""
        if isinstance(payload, (list, tuple)):
            return [self.transform(item) for item in payload]
        try:
            name = self.TRANSFORMS[type(payload)]
        except KeyError:
            raise TypeError(f"cannot serialize {type(payload).__name__}")
        transform: Callable[[Any], Any] = getattr(self, name)
        return transform(payload)

    def serialize(self, payload: Any) -> str:
        """Render ``payload`` with fixed-precision floats."""
        return json.dumps(self.transform(payload),
                          cls=FixedPrecisionJSONEncoder, indent=2) + "\n"


def as_json(payload: Any) -> str:
    """Serialize a domain result as JSON."""
    return JSONSerializer().serialize(payload)


def parse_counting_function(record: Dict[str, Any]) -> CountingFunction:
    """Counting function from a record that matches the schema."""
    validate(record, "CountingFunction")
    frequencies = [jump["lambda"] for jump in record["jumps"]]
    if any(b <= a for a, b in zip(frequencies, frequencies[1:])):
        raise ValidationError("jump frequencies must increase strictly")
    if frequencies and frequencies[-1] > record["cutoff"]:
        raise ValidationError("jumps beyond the cutoff")
    second = record.get("second_point")
    return CountingFunction(
        jumps=tuple(Jump(float(j["lambda"]), float(j["weight"]))
                    for j in record["jumps"]),
        cutoff=float(record["cutoff"]),
        model=record["model"],
        point=tuple(float(p) for p in record.get("point", [])),
        second_point=tuple(float(p) for p in second)
        if second is not None else None,
        suppressed=tuple(float(f) for f in record.get("suppressed", [])),
        complete=bool(record.get("complete", False)),
    )


def load_counting_function(path: str) -> CountingFunction:
    """
    Read a counting function artifact.

    Raises
    ------
    :class:`.ValidationError`
        If the file is not JSON or does not match the schema.
    """
    try:
        with open(path) as f:
            record = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ValidationError(f"cannot read {path}: {e}") from e
    logger.debug("loaded counting function from %s", path)
    return parse_counting_function(record)
