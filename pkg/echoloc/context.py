"""Layered run configuration: defaults, then a config file, then flags."""

import logging
from dataclasses import fields
from typing import Any, Callable, Dict, Mapping, Optional

from echoloc.domain import RunConfig, parse_config_file, parse_point
from echoloc.errors import ValidationError

logger = logging.getLogger(__name__)


def _as_int(text: str) -> int:
    return int(text)


def _as_float(text: str) -> float:
    return float(text)


CONVERTERS: Dict[str, Callable[[str], Any]] = {
    "point": parse_point,
    "cutoff": _as_float,
    "frequency_tol": _as_float,
    "weight_tol": _as_float,
    "cluster_tol": _as_float,
    "acceptance_residual": _as_float,
    "generic_acceptance_residual": _as_float,
    "seed": _as_int,
    "threads": _as_int,
}


def _convert(key: str, value: str) -> Any:
    try:
        return CONVERTERS.get(key, str)(value)
    except ValueError:
        raise ValidationError(f"invalid value for '{key}': '{value}'")


def read_config_file(path: str) -> Dict[str, Any]:
    """Typed settings of a config file; unknown keys are rejected."""
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise ValidationError(f"cannot read config file {path}: {e}")
    raw = parse_config_file(text, allowed=RunConfig.keys())
    return {key: _convert(key, value) for key, value in raw.items()}


def get_application_config(
    config_file: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Get the effective settings of a run.

    Parameters
    ----------
    config_file : str
        Optional ``key = value`` file layered over the defaults of
        :mod:`echoloc.config`.
    overrides : mapping
        Command-line values; ``None`` means "not given".

    Returns
    -------
    dict
        Settings by :class:`.RunConfig` field name.
    """
    settings: Dict[str, Any] = {
        f.name: getattr(RunConfig, f.name) for f in fields(RunConfig)
        if f.name != "subcommand" and hasattr(RunConfig, f.name)
    }
    if config_file:
        from_file = read_config_file(config_file)
        logger.debug("settings from %s: %s", config_file, from_file)
        settings.update(from_file)
    settings.update(
        {key: value for key, value in (overrides or {}).items()
         if value is not None}
    )
    return settings
