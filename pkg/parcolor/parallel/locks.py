"""Single-pass parallel coloring with a coarse boundary lock or ordered per-vertex locks"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/parallel/locks.ipynb.

# %% auto #0
__all__ = ['LOCK_MODES', 'LockTable', 'LockColoring', 'coarse_color', 'fine_color']

# %% ../../nbs/parallel/locks.ipynb #b2d6e0f4
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence

import numpy as np
from fastcore.basics import patch

from ..core.coloring import Coloring, first_fit
from ..core.graph import Graph
from ..core.partition import Partitioning

logger = logging.getLogger(__name__)

LOCK_MODES = ("coarse", "fine")

# %% ../../nbs/parallel/locks.ipynb #6f09a3c1
class LockTable:
    """One lock per vertex plus one lock guarding all boundary coloring.

    With `instrument=True` every single acquisition is checked against the locks the calling thread
    already holds: ids must rise strictly, and an ordered set may only be taken with nothing held.
    """

    def __init__(self,
                 n: int,  # Number of vertex locks
                 instrument: bool = False  # Check acquisition order and count violations
                 ):
        self.vertex_locks = [threading.Lock() for _ in range(n)]
        self.boundary_lock = threading.Lock()
        self.instrument = instrument
        self.violations = 0  # Out-of-order or nested acquisitions seen
        self.acquired_sets = 0  # Ordered sets taken so far
        self._stats_lock = threading.Lock()
        self._held = threading.local()

    def _violation(self, message: str) -> None:
        logger.warning("lock order violation: %s", message)
        with self._stats_lock:
            self.violations += 1

    def held(self) -> List[int]:  # Vertex locks the calling thread holds, in acquisition order
        if not hasattr(self._held, "ids"):
            self._held.ids = []
        return self._held.ids

    def acquire(self,
                v: int  # Vertex whose lock to take
                ) -> None:
        """Take one vertex lock. Instrumented, every id must exceed the last one this thread still holds."""
        if not self.instrument:
            self.vertex_locks[v].acquire()
            return
        held = self.held()
        if held and v <= held[-1]:
            self._violation(f"lock {v} taken while holding {held[-1]}")
        self.vertex_locks[v].acquire()
        held.append(v)

    def release(self,
                v: int  # Vertex whose lock to drop
                ) -> None:
        self.vertex_locks[v].release()
        if self.instrument:
            self.held().remove(v)

    def acquire_ordered(self,
                        ids: Sequence[int]  # Vertices whose locks are needed, any order, duplicates allowed
                        ) -> List[int]:  # Ids actually locked, ascending
        order = sorted(set(ids))
        if self.instrument:
            if self.held():
                self._violation(f"acquiring {len(order)} locks while still holding {self.held()[:5]}")
            with self._stats_lock:
                self.acquired_sets += 1
        for v in order:
            self.acquire(v)
        return order

    def release_all(self,
                    ids: Sequence[int]  # Ids returned by acquire_ordered
                    ) -> None:
        for v in reversed(ids):
            self.release(v)

    @contextmanager
    def locked(self,
               ids: Sequence[int]  # Vertices to lock for the duration of the block
               ) -> Iterator[List[int]]:
        order = self.acquire_ordered(ids)
        try:
            yield order
        finally:
            self.release_all(order)

# %% ../../nbs/parallel/locks.ipynb #a85c2f17
class LockColoring:
    """One run of the lock-based algorithm over `part.p` workers.

    Every worker colors its internal vertices first, without locks, since their neighbors all belong to
    the same worker. It then colors its boundary vertices, each inside a critical section: the single
    boundary lock (coarse) or the locks of the vertex and all its neighbors taken in id order (fine).
    """

    def __init__(
        self,
        g: Graph,  # Graph to color
        part: Partitioning,  # Blocks, one per worker
        mode: str = "fine",  # "coarse" or "fine"
        instrument: bool = False  # Check lock order and count writes per vertex
    ):
        if mode not in LOCK_MODES:
            raise ValueError(f"lock mode must be one of {LOCK_MODES}, got {mode!r}")
        part.check_matches(g)
        self.g, self.part, self.mode = g, part, mode
        self.coloring = Coloring.empty(g)
        self.table = LockTable(g.n if mode == "fine" else 0, instrument=instrument)
        self.write_counts: Optional[np.ndarray] = np.zeros(g.n, dtype=np.int64) if instrument else None
        self._adj = g.adjacency

    def _color(self, v: int) -> None:
        colors = self.coloring.colors
        colors[v] = first_fit(colors[self.g.neighbors_of(v)], self.coloring.m)
        if self.write_counts is not None:
            self.write_counts[v] += 1

# %% ../../nbs/parallel/locks.ipynb #3e71b9d8
@patch
def _worker(
    self: LockColoring,
    i: int  # Block / thread index
) -> None:
    for v in self.part.internal_of(i).tolist():
        self._color(v)
    boundary = self.part.boundary_of(i).tolist()
    if self.mode == "coarse":
        for v in boundary:
            with self.table.boundary_lock:
                self._color(v)
    else:
        for v in boundary:
            with self.table.locked([v, *self._adj[v]]):
                self._color(v)

# %% ../../nbs/parallel/locks.ipynb #c90e4b62
@patch
def run(self: LockColoring) -> Coloring:
    """Spawn one worker per block and wait for all of them."""
    with ThreadPoolExecutor(max_workers=self.part.p, thread_name_prefix=f"{self.mode}-lock") as pool:
        for future in [pool.submit(self._worker, i) for i in range(self.part.p)]:
            future.result()
    if self.table.violations:
        logger.warning("%d lock order violations during %s run", self.table.violations, self.mode)
    return self.coloring

# %% ../../nbs/parallel/locks.ipynb #58d1af07
def coarse_color(
    g: Graph,  # Graph to color
    part: Partitioning  # Blocks from partition_uniform on g
) -> Coloring:  # Proper coloring, boundary vertices serialized by one lock
    return LockColoring(g, part, mode="coarse").run()

# %% ../../nbs/parallel/locks.ipynb #e4f2a690
def fine_color(
    g: Graph,  # Graph to color
    part: Partitioning  # Blocks from partition_uniform on g
) -> Coloring:  # Proper coloring, boundary vertices guarded by their closed neighborhood's locks
    return LockColoring(g, part, mode="fine").run()
