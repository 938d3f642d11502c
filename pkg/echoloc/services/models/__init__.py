"""
Explicit eigenspace enumerations for the model geometries.

The primary entrypoint is :func:`.enumerate_blocks`, which lists the distinct
frequencies of a :class:`.ModelGeometry` up to a cutoff together with their
multiplicities and eigenspace kernels. :func:`.block_weight` and
:func:`.eigenspace_kernel` evaluate a block at one or two points, and
:func:`.isometry_orbit` describes what echolocation can hope to recover.
"""

from functools import lru_cache
from typing import Any, Dict, List, Sequence, Type

import numpy as np

from echoloc.domain import (
    EigenspaceBlock,
    ModelGeometry,
    ModelKind,
    Orbit,
)

from .base import SpectralModel, weight_matrix
from .disk import DiskModel
from .exceptions import CapacityExceeded, InvalidModel, InvalidPoint
from .interval import IntervalModel
from .rectangle import RectangleModel
from .sphere import SphereModel
from .torus import TorusModel

__all__ = (
    "SpectralModel",
    "weight_matrix",
    "get_model",
    "enumerate_blocks",
    "block_weight",
    "eigenspace_kernel",
    "isometry_orbit",
    "CapacityExceeded",
    "InvalidModel",
    "InvalidPoint",
)

MODELS: Dict[ModelKind, Type[SpectralModel]] = {
    ModelKind.interval: IntervalModel,
    ModelKind.rectangle: RectangleModel,
    ModelKind.square: RectangleModel,
    ModelKind.torus: TorusModel,
    ModelKind.disk: DiskModel,
    ModelKind.sphere: SphereModel,
}


@lru_cache(maxsize=64)
def get_model(geometry: ModelGeometry) -> SpectralModel:
    """Get the (shared) spectral model of ``geometry``."""
    try:
        return MODELS[geometry.kind](geometry)
    except KeyError:
        raise InvalidModel(f"no spectral model for {geometry.kind}")


def enumerate_blocks(
    model: ModelGeometry, cutoff: float
) -> List[EigenspaceBlock]:
    """Eigenspace blocks of ``model`` with frequency at most ``cutoff``."""
    return get_model(model).enumerate_blocks(cutoff)


def block_weight(block: EigenspaceBlock, x: Sequence[float]) -> Any:
    """Jump of the pointwise counting function at ``block.frequency``."""
    return _scalar(block.weight(np.asarray(x, dtype=float)))


def eigenspace_kernel(
    block: EigenspaceBlock, x: Sequence[float], y: Sequence[float]
) -> Any:
    """Value of the eigenspace kernel of ``block`` at ``(x, y)``."""
    return _scalar(
        block.kernel(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    )


def isometry_orbit(model: ModelGeometry, x: Sequence[float]) -> Orbit:
    """Isometry orbit of ``x`` in ``model``."""
    return get_model(model).isometry_orbit(x)


def _scalar(value: Any) -> Any:
    return float(value) if np.ndim(value) == 0 else value
