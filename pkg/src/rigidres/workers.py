"""Opt-in parallelism for per-element computations.

RIGIDRES_WORKERS controls the pool size (default 1 = sequential).
Workloads here are pure exact-arithmetic functions, so Python threads
only pay off when callers overlap other work; the knob mainly exists
so batch scripts can experiment without code changes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "RIGIDRES_WORKERS"


def worker_count():
    raw = os.environ.get(ENV_VAR, "1")
    try:
        n = int(raw)
    except ValueError as err:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from err
    return max(1, n)


def parallel_map(fn, items):
    """map(fn, items) as a list, fanning out when workers are enabled."""
    items = list(items)
    n = worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
