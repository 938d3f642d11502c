"""File utilities."""

import os
import tempfile
from contextlib import contextmanager
from typing import IO, Iterator


@contextmanager
def atomic_write(path: str, mode: str = "w") -> Iterator[IO]:
    """
    Write ``path`` through a temporary file in the same directory.

    The temporary file replaces ``path`` only when the block exits cleanly,
    so an interrupted run never leaves a partially written artifact.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(
        dir=directory, prefix=f".{os.path.basename(path)}.", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, mode, newline="" if "b" not in mode else None) \
                as handle:
            yield handle
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
