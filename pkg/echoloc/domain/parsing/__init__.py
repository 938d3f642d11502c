"""Grammars for model-spec strings and run config files."""

__all__ = ["parse_model_spec", "parse_point", "parse_config_file"]

from echoloc.domain.parsing.model_spec import parse_model_spec, parse_point
from echoloc.domain.parsing.config_file import parse_config_file
