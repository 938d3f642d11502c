"""
Domain classes for echolocation.

The domain provides a description of the main data objects used in module
APIs. Specifically, the :mod:`echoloc.controllers`, :mod:`echoloc.services`,
and :mod:`echoloc.process` modules should use the domain as their primary
"language".
"""

__all__ = [
    # base
    "Point",
    "ModelKind",
    "BoundaryCondition",
    "ModelGeometry",
    "Kernel",
    "EigenspaceBlock",
    "OrbitKind",
    "Orbit",
    # counting
    "Jump",
    "CountingFunction",
    "TimbreEntry",
    "Timbre",
    "MatchReport",
    "CountingFunctionRecord",
    # transforms
    "HeatTraceResult",
    "WaveTraceSample",
    "RecoveredCount",
    "CurvatureEstimate",
    "WaveTrace",
    # location
    "LocationStatus",
    "Candidate",
    "LocationReport",
    "LocationReportRecord",
    # graphs
    "GraphOperator",
    "Graph",
    "GraphSpectrum",
    "FailureReport",
    "FailureRecord",
    # run
    "RunConfig",
    "SUBCOMMANDS",
    # parsing
    "parse_model_spec",
    "parse_point",
    "parse_config_file",
]

from echoloc.domain.base import (
    Point,
    ModelKind,
    BoundaryCondition,
    ModelGeometry,
    Kernel,
    EigenspaceBlock,
    OrbitKind,
    Orbit,
)
from echoloc.domain.counting import (
    Jump,
    CountingFunction,
    TimbreEntry,
    Timbre,
    MatchReport,
    CountingFunctionRecord,
)
from echoloc.domain.transforms import (
    HeatTraceResult,
    WaveTraceSample,
    RecoveredCount,
    CurvatureEstimate,
    WaveTrace,
)
from echoloc.domain.location import (
    LocationStatus,
    Candidate,
    LocationReport,
    LocationReportRecord,
)
from echoloc.domain.graphs import (
    GraphOperator,
    Graph,
    GraphSpectrum,
    FailureReport,
    FailureRecord,
)
from echoloc.domain.run import RunConfig, SUBCOMMANDS
from echoloc.domain.parsing import (
    parse_model_spec,
    parse_point,
    parse_config_file,
)
