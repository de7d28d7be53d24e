"""Optional thread parallelism.

Work items across this package (families, fixture checks, solver starts)
are independent and all data is immutable, so a plain ordered map is always
correct.  ``MOMENTFORGE_THREADS`` caps the worker count; unset or 1 means
serial execution.  Output order never depends on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def thread_count() -> int:
    raw = os.environ.get("MOMENTFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], U], items: Iterable[T]) -> list[U]:
    items = list(items)
    workers = min(thread_count(), len(items)) if items else 1
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
