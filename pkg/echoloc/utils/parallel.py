"""Order-preserving parallel maps."""

import logging
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Callable, Deque, Iterable, Iterator, Optional, TypeVar

from echoloc import config

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

PENDING_PER_THREAD = 2
"""Submitted but unconsumed items allowed per worker."""


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    threads: Optional[int] = None,
) -> Iterator[R]:
    """
    Apply ``func`` to ``items`` on a thread pool, yielding in input order.

    Results never depend on the number of threads. With one thread the map
    runs inline. ``items`` is consumed lazily: at most
    ``PENDING_PER_THREAD`` items per worker are in flight, so unbounded
    streams work.
    """
    workers = threads or config.THREADS
    if workers <= 1:
        yield from map(func, items)
        return
    window = PENDING_PER_THREAD * workers
    logger.debug("mapping on %i threads, window %i", workers, window)
    pending: Deque["Future[R]"] = deque()
    with ThreadPoolExecutor(max_workers=workers,
                            thread_name_prefix="echoloc") as pool:
        for item in items:
            pending.append(pool.submit(func, item))
            if len(pending) >= window:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()
