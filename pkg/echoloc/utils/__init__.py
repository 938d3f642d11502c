"""Provides utility functions."""
__all__ = ["atomic_write", "ordered_map"]

from echoloc.utils.files import atomic_write
from echoloc.utils.parallel import ordered_map
