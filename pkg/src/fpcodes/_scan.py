"""Short-circuiting scans over independent work items.

A scan looks for the first item (in input order) for which a check returns
a witness. With several jobs the items are pulled lazily in fixed-size
chunks that run in worker processes, with at most ``WINDOW_PER_JOB * jobs``
chunks in flight. Chunks are collected in order and the rest are cancelled
once one reports a violation, so the answer never depends on the number of
jobs.
"""
from __future__ import annotations

import itertools
import logging
import os
from collections import deque
from collections.abc import Callable, Iterable
from concurrent.futures import Future, ProcessPoolExecutor
from typing import TypeVar


__all__ = ["first_violation", "default_jobs"]

logger = logging.getLogger(__name__)

T = TypeVar("T")
W = TypeVar("W")

CHUNK_SIZE = 1024
WINDOW_PER_JOB = 2


def default_jobs() -> int:
    return os.cpu_count() or 1


def _first_in(check: Callable[[T], W | None], items: Iterable[T]) -> W | None:
    for item in items:
        witness = check(item)
        if witness is not None:
            return witness
    return None


def first_violation(
    check: Callable[[T], W | None],
    items: Iterable[T],
    jobs: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> W | None:
    """The witness of the first item that fails ``check``, or None.

    ``check`` must be picklable (a module-level function or a
    functools.partial of one) when ``jobs`` is greater than one.
    """
    if jobs <= 1:
        return _first_in(check, items)

    iterator = iter(items)
    chunks = iter(lambda: list(itertools.islice(iterator, chunk_size)), [])
    first = next(chunks, None)
    if first is None:
        return None
    if len(first) < chunk_size:
        # The whole stream fits in one chunk.
        return _first_in(check, first)

    window = WINDOW_PER_JOB * jobs
    logger.debug("scanning in chunks of %d, %d in flight on %d workers",
                 chunk_size, window, jobs)
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        pending: deque[Future] = deque()
        for chunk in itertools.chain([first], itertools.islice(chunks,
                                                               window - 1)):
            pending.append(pool.submit(_first_in, check, chunk))
        while pending:
            witness = pending.popleft().result()
            if witness is not None:
                return witness
            chunk = next(chunks, None)
            if chunk is not None:
                pending.append(pool.submit(_first_in, check, chunk))
        return None
    finally:
        pool.shutdown(wait=True, cancel_futures=True)
