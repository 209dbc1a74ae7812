from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "RELIANCE_THREADS"


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_ordered(func, items, workers=None):
    """``[func(x) for x in items]``, optionally on a thread pool.

    Results come back in input order regardless of completion order, so any
    reduction over them is deterministic.
    """
    items = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def sum_columns(rows, n):
    """Elementwise sum of per-source vectors, accumulated in list order."""
    total = [0.0] * n
    for row in rows:
        for i, x in enumerate(row):
            if x:
                total[i] += x
    return total
