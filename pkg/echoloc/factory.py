"""Run factory: logging setup and the run configuration."""

import logging
import sys
from typing import Any, Mapping, Optional

from echoloc import config, consts
from echoloc.context import get_application_config
from echoloc.domain import RunConfig
from echoloc.errors import ValidationError

FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(
    level: Optional[Any] = None, logfile: Optional[str] = None
) -> None:
    """Send log records to stderr, and to ``logfile`` when set."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_echoloc", False):
            root.removeHandler(handler)
    handlers = [logging.StreamHandler(sys.stderr)]
    logfile = logfile or config.LOGFILE
    if logfile:
        handlers.append(logging.FileHandler(logfile))
    for handler in handlers:
        handler.setFormatter(logging.Formatter(FORMAT))
        handler._echoloc = True  # type: ignore
        root.addHandler(handler)
    level = level if level is not None else config.LOGLEVEL
    if config.DEBUG:
        level = logging.DEBUG
    root.setLevel(int(level) if str(level).isdigit() else str(level).upper())

    logging.getLogger("lark").setLevel(logging.ERROR)


def build_run_config(
    subcommand: str,
    config_file: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """
    Build the validated :class:`.RunConfig` of one invocation.

    When no format flag is given, a ``.csv`` output path selects CSV.
    """
    settings = get_application_config(config_file, overrides)
    out = settings.get("out")
    if not (overrides or {}).get("fmt") and out \
            and str(out).lower().endswith(f".{consts.CSV}"):
        settings["fmt"] = consts.CSV
    try:
        return RunConfig(subcommand=subcommand, **settings)
    except TypeError as e:
        raise ValidationError(f"invalid settings: {e}")
