"""Process-pool fan-out with a shared, monotone best-so-far value.

Workers only ever raise the shared value, and it is used for pruning alone:
results are reduced in task order in the parent, so the outcome does not
depend on the number of workers.
"""

from __future__ import annotations

import multiprocessing
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from crossunion.errors import RangeError

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "CROSSUNION_THREADS"


class _LocalBest:
    def __init__(self, value: int = 0) -> None:
        self.value = value
        self._lock = threading.Lock()

    def get_lock(self):
        return self._lock


_best = _LocalBest()


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        raw = os.environ.get(ENV_VAR, "1")
        try:
            workers = int(raw)
        except ValueError:
            raise RangeError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise RangeError(f"worker count must be at least 1, got {workers}")
    return workers


def best_so_far() -> int:
    return _best.value


def offer(value: int) -> None:
    with _best.get_lock():
        if value > _best.value:
            _best.value = value


def _install(shared) -> None:
    global _best
    _best = shared


def run_tasks(fn: Callable[[T], R], tasks: Sequence[T], workers: int) -> list[R]:
    """Apply ``fn`` to every task and return the results in task order."""
    global _best
    if workers == 1 or len(tasks) <= 1:
        saved, _best = _best, _LocalBest()
        try:
            return [fn(t) for t in tasks]
        finally:
            _best = saved
    shared = multiprocessing.Value("q", 0)
    with ProcessPoolExecutor(max_workers=workers, initializer=_install, initargs=(shared,)) as pool:
        return list(pool.map(fn, tasks))


def split(items: Sequence[T], parts: int) -> list[list[T]]:
    """Deal items round-robin into ``parts`` lists, so each part sees a prefix-heavy mix."""
    out: list[list[T]] = [[] for _ in range(max(1, parts))]
    for i, item in enumerate(items):
        out[i % len(out)].append(item)
    return [p for p in out if p]
