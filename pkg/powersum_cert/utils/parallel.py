#!/usr/bin/env python3
"""
Parallel Map Module

Chunked process-pool map with ordered results and cancellation at item
boundaries. Worker callables must be picklable (module-level functions or
functools.partial over them).

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import multiprocessing
from typing import Any, Callable, Iterable, List, Optional, Protocol, Sequence, Tuple, TypeVar

from ..core.exceptions import ParameterError, SearchCancelledError

T = TypeVar("T")
R = TypeVar("R")


class CancelToken(Protocol):
    """Anything with ``is_set()``, e.g. threading.Event or multiprocessing.Event"""

    def is_set(self) -> bool:
        ...


def chunk_ranges(start: int, stop: int, chunk_size: int) -> List[Tuple[int, int]]:
    """
    Split the inclusive range [start, stop] into half-open chunks

    Returns:
        [(lo, hi), ...] covering start..stop in ascending order
    """
    if chunk_size < 1:
        raise ParameterError("chunk_size must be positive", parameter="chunk_size", value=chunk_size)
    chunks = []
    lo = start
    while lo <= stop:
        hi = min(lo + chunk_size, stop + 1)
        chunks.append((lo, hi))
        lo = hi
    return chunks


def _check_cancel(cancel: Optional[CancelToken], completed: int, total: int):
    if cancel is not None and cancel.is_set():
        raise SearchCancelledError(
            f"cancelled after {completed} of {total} chunks",
            completed_chunks=completed,
            total_chunks=total,
        )


def ordered_map(func: Callable[[T], R],
                items: Iterable[T],
                workers: int = 1,
                cancel: Optional[CancelToken] = None,
                on_result: Optional[Callable[[int, T, R], Any]] = None) -> List[R]:
    """
    Apply func to every item, results in input order

    Runs inline when workers <= 1 or there is at most one item; otherwise a
    multiprocessing pool streams results back in order.

    Args:
        func: picklable worker
        items: work items
        workers: process count
        cancel: checked before every item is consumed
        on_result: called in the parent with (index, item, result)

    Raises:
        SearchCancelledError: cancel was set
    """
    work: Sequence[T] = list(items)
    total = len(work)
    results: List[R] = []

    if workers <= 1 or total <= 1:
        for index, item in enumerate(work):
            _check_cancel(cancel, index, total)
            result = func(item)
            results.append(result)
            if on_result is not None:
                on_result(index, item, result)
        return results

    pool = multiprocessing.Pool(min(workers, total))
    try:
        for index, result in enumerate(pool.imap(func, work)):
            _check_cancel(cancel, index, total)
            results.append(result)
            if on_result is not None:
                on_result(index, work[index], result)
        pool.close()
    except BaseException:
        pool.terminate()
        raise
    finally:
        pool.join()
    return results
