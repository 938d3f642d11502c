"""Provides serialization functions for echolocation artifacts."""
__all__ = [
    "JSONSerializer",
    "as_json",
    "CSVSerializer",
    "as_csv",
    "load_counting_function",
    "parse_counting_function",
    "validate",
    "get_serializer",
]

from echoloc import consts
from echoloc.errors import ValidationError
from echoloc.serialize.base import BaseSerializer
from echoloc.serialize.json import (
    JSONSerializer,
    as_json,
    load_counting_function,
    parse_counting_function,
    validate,
)
from echoloc.serialize.csv import CSVSerializer, as_csv


def get_serializer(fmt: str) -> BaseSerializer:
    """Serializer for an output format name."""
    if fmt == consts.JSON:
        return JSONSerializer()
    if fmt == consts.CSV:
        return CSVSerializer()
    raise ValidationError(f"unknown output format: {fmt}")
