"""Run configuration shared by every subcommand."""

from dataclasses import dataclass, field, fields
from typing import Optional, Tuple

from echoloc import config, consts
from echoloc.errors import ValidationError

SUBCOMMANDS = (
    "spectrum",
    "count",
    "timbre",
    "heat",
    "curvature",
    "wave",
    "locate",
    "kuznecov2",
    "graph",
)

TOLERANCES = (
    "frequency_tol",
    "weight_tol",
    "cluster_tol",
    "acceptance_residual",
    "generic_acceptance_residual",
)


@dataclass(frozen=True)
class RunConfig:
    """Effective settings of one invocation."""

    subcommand: str
    model: Optional[str] = None
    point: Tuple[float, ...] = field(default_factory=tuple)
    cutoff: Optional[float] = None
    frequency_tol: float = config.FREQUENCY_TOL
    weight_tol: float = config.WEIGHT_TOL
    cluster_tol: float = config.CLUSTER_TOL
    acceptance_residual: float = config.ACCEPTANCE_RESIDUAL
    generic_acceptance_residual: float = config.GENERIC_ACCEPTANCE_RESIDUAL
    out: Optional[str] = None
    fmt: str = consts.JSON
    seed: int = 0
    threads: int = config.THREADS

    def __post_init__(self) -> None:
        """Reject out-of-range settings."""
        if self.subcommand not in SUBCOMMANDS:
            raise ValidationError(f"unknown subcommand: {self.subcommand}")
        for name in TOLERANCES:
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be positive")
        if self.cutoff is not None and not self.cutoff > 0:
            raise ValidationError(f"cutoff must be positive: {self.cutoff}")
        if self.fmt not in consts.FORMATS:
            raise ValidationError(f"unknown output format: {self.fmt}")
        if self.threads < 1:
            raise ValidationError(
                f"threads must be at least 1: {self.threads}"
            )

    @classmethod
    def keys(cls) -> Tuple[str, ...]:
        """Settings that a config file may carry."""
        return tuple(f.name for f in fields(cls) if f.name != "subcommand")
