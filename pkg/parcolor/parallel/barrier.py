"""Barrier-synchronized two-phase parallel coloring: tentative first-fit, then cross-block conflict detection"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/parallel/barrier.ipynb.

# %% auto #0
__all__ = ['ThreadState', 'RoundStats', 'RoundSnapshot', 'PhaseMonitor', 'BarrierColoring', 'barrier_color',
           'round_trace']

# %% ../../nbs/parallel/barrier.ipynb #4e1a2b90
import logging
import threading
from concurrent.futures import ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from fastcore.basics import patch

from ..core.coloring import UNSET, Coloring, first_fit
from ..core.graph import Graph
from ..core.partition import Partitioning

logger = logging.getLogger(__name__)

# %% ../../nbs/parallel/barrier.ipynb #c7d03f52
@dataclass
class ThreadState:
    """Work sets of one worker. Everything here is touched only by the owning thread."""
    thread_index: int  # Block index i owned by this worker
    U: List[int]  # Vertices to (re)color this round, ascending
    R: List[int] = field(default_factory=list)  # Vertices to recolor next round
    forbidden: Dict[int, Dict[int, int]] = field(default_factory=dict)  # Owned vertex -> {neighbor: last seen color}

# %% ../../nbs/parallel/barrier.ipynb #e0b5a7d1
@dataclass
class RoundStats:
    """Iteration statistics of one barrier run."""
    rounds: int = 0  # Rounds executed, the final all-idle round included
    recolors_per_round: List[int] = field(default_factory=list)  # Σ|R_i| at the end of each round
    recolor_count_per_vertex: Optional[np.ndarray] = None  # Times each vertex was colored again after round 1

# %% ../../nbs/parallel/barrier.ipynb #1b6f8e24
@dataclass
class RoundSnapshot:
    """State of every worker at the end of one round."""
    round: int  # 1-based round index
    U: List[List[int]]  # Work set of each thread during the round
    R: List[List[int]]  # Recolor set of each thread after conflict detection
    colors: np.ndarray  # Copy of all colors at the end of the round

    def log_lines(self) -> List[str]:  # "round thread |U| |R|" debug lines
        return [f"{self.round} {i} {len(u)} {len(r)}" for i, (u, r) in enumerate(zip(self.U, self.R))]

# %% ../../nbs/parallel/barrier.ipynb #8a2c6d3e
class PhaseMonitor:
    """Records phase entry/exit events in one global order to check that phases never overlap."""

    def __init__(self):
        self._lock = threading.Lock()
        self.events: List[Tuple[int, int, int, str]] = []  # (round, phase, thread, "start" | "end")

    def record(self,
               round_: int,  # 1-based round index
               phase: int,  # 1 = tentative coloring, 2 = conflict detection
               thread: int,  # Worker index
               event: str  # "start" or "end"
               ) -> None:
        with self._lock:
            self.events.append((round_, phase, thread, event))

    def interleavings(self) -> List[str]:  # Descriptions of every overlap found, empty when phases are separated
        position: Dict[Tuple[int, int, str], List[int]] = {}
        for seq, (r, ph, _, ev) in enumerate(self.events):
            position.setdefault((r, ph, ev), []).append(seq)
        problems = []
        rounds = sorted({r for r, _, _, _ in self.events})
        for r in rounds:
            # (finished epoch, next epoch)
            for done, nxt in (((r, 1), (r, 2)), ((r, 2), (r + 1, 1))):
                ends = position.get((*done, "end"), [])
                starts = position.get((*nxt, "start"), [])
                if ends and starts and max(ends) > min(starts):
                    problems.append(f"round {nxt[0]} phase {nxt[1]} started before round {done[0]} phase {done[1]} ended")
        return problems

# %% ../../nbs/parallel/barrier.ipynb #10f9f0ee
class BarrierColoring:
    """One run of the two-phase barrier algorithm over `part.p` workers.

    Each round every worker first colors its work set U with first-fit (phase 1), waits at a barrier,
    then compares its boundary vertices in U against neighbors in other blocks (phase 2). On a clash
    the endpoint in the lower block is recolored next round by its own worker. A second barrier closes
    the round; the run stops after the first round in which no worker had anything to color.
    """

    def __init__(
        self,
        g: Graph,  # Graph to color
        part: Partitioning,  # Blocks, one per worker
        trace: bool = False,  # Keep a RoundSnapshot per round
        monitor: Optional[PhaseMonitor] = None  # Optional phase event recorder
    ):
        part.check_matches(g)
        self.g, self.part = g, part
        self.coloring = Coloring.empty(g)
        self.stats = RoundStats(recolor_count_per_vertex=np.zeros(g.n, dtype=np.int64))
        self.snapshots: List[RoundSnapshot] = []
        self._trace = trace
        self._monitor = monitor
        self._adj = g.adjacency
        self._block_of = part.block_of.tolist()
        self._is_boundary = part.is_boundary.tolist()
        self._states = [ThreadState(i, part.members[i].tolist()) for i in range(part.p)]
        self._active = [False] * part.p
        self._keep_going = True
        self._phase_barrier = threading.Barrier(part.p)
        self._round_barrier = threading.Barrier(part.p, action=self._close_round)

    def _mark(self, round_: int, phase: int, thread: int, event: str):
        if self._monitor is not None:
            self._monitor.record(round_, phase, thread, event)

# %% ../../nbs/parallel/barrier.ipynb #5c39e2f8
@patch
def _tentative_color(
    self: BarrierColoring,
    st: ThreadState  # Calling worker's state
) -> None:
    """Phase 1: first-fit every vertex of U and push its color to same-block neighbors."""
    colors, m, i = self.coloring.colors, self.coloring.m, st.thread_index
    block_of, recolors = self._block_of, self.stats.recolor_count_per_vertex
    for v in st.U:
        if colors[v] != UNSET:
            recolors[v] += 1
        seen = st.forbidden.setdefault(v, {})
        c = first_fit(np.fromiter(seen.values(), dtype=np.int64, count=len(seen)), m)
        colors[v] = c
        for u in self._adj[v]:
            if block_of[u] == i:
                st.forbidden.setdefault(u, {})[v] = c

# %% ../../nbs/parallel/barrier.ipynb #d83e4a61
@patch
def _detect_conflicts(
    self: BarrierColoring,
    st: ThreadState  # Calling worker's state
) -> None:
    """Phase 2: record cross-block colors and queue own vertices that clash with a higher block."""
    colors, i = self.coloring.colors, st.thread_index
    block_of = self._block_of
    st.R = []
    for v in st.U:
        if not self._is_boundary[v]:
            continue
        seen, cv, clash = st.forbidden[v], colors[v], False
        for u in self._adj[v]:
            j = block_of[u]
            if j == i:
                continue
            cu = int(colors[u])
            seen[u] = cu
            if cu == cv and j > i:
                clash = True
        if clash:
            st.R.append(v)

# %% ../../nbs/parallel/barrier.ipynb #2a9f6c0b
@patch
def _close_round(self: BarrierColoring) -> None:
    """Barrier action: runs in exactly one worker while all others wait at the round barrier."""
    self.stats.rounds += 1
    self.stats.recolors_per_round.append(sum(len(st.R) for st in self._states))
    if self._trace:
        self.snapshots.append(RoundSnapshot(self.stats.rounds, [list(st.U) for st in self._states],
                                            [list(st.R) for st in self._states], self.coloring.colors.copy()))
    if logger.isEnabledFor(logging.DEBUG):
        for st in self._states:
            logger.debug("round=%d thread=%d |U|=%d |R|=%d", self.stats.rounds, st.thread_index, len(st.U), len(st.R))
    self._keep_going = any(self._active)

# %% ../../nbs/parallel/barrier.ipynb #7e0d1b95
@patch
def _worker(
    self: BarrierColoring,
    i: int  # Block / thread index
) -> None:
    st = self._states[i]
    round_ = 0
    try:
        while True:
            round_ += 1
            # idle workers still cross both barriers until everyone is done
            self._active[i] = bool(st.U)
            self._mark(round_, 1, i, "start")
            self._tentative_color(st)
            self._mark(round_, 1, i, "end")
            self._phase_barrier.wait()
            self._mark(round_, 2, i, "start")
            self._detect_conflicts(st)
            self._mark(round_, 2, i, "end")
            self._round_barrier.wait()
            if not self._keep_going:
                return
            st.U, st.R = st.R, []
    except threading.BrokenBarrierError:
        raise
    except BaseException:
        self._phase_barrier.abort()
        self._round_barrier.abort()
        raise

# %% ../../nbs/parallel/barrier.ipynb #f4c8a2d6
@patch
def run(self: BarrierColoring) -> Tuple[Coloring, RoundStats]:
    """Spawn one worker per block and wait for the coloring to finish."""
    with ThreadPoolExecutor(max_workers=self.part.p, thread_name_prefix="barrier") as pool:
        futures = [pool.submit(self._worker, i) for i in range(self.part.p)]
        wait(futures)
    errors = [f.exception() for f in futures if f.exception() is not None]
    if errors:
        # siblings of the failing worker only see a broken barrier
        raise next((e for e in errors if not isinstance(e, threading.BrokenBarrierError)), errors[0])
    return self.coloring, self.stats

# %% ../../nbs/parallel/barrier.ipynb #63ad07e9
def barrier_color(
    g: Graph,  # Graph to color
    part: Partitioning,  # Blocks from partition_uniform (or partition_random) on g
    monitor: Optional[PhaseMonitor] = None  # Optional phase event recorder
) -> Tuple[Coloring, RoundStats]:  # Proper coloring and iteration statistics
    return BarrierColoring(g, part, monitor=monitor).run()

# %% ../../nbs/parallel/barrier.ipynb #0d5f71ba
def round_trace(
    g: Graph,  # Graph to color
    part: Partitioning  # Blocks, one per worker
) -> List[RoundSnapshot]:  # One snapshot per executed round
    """Run the barrier algorithm and keep every round's work sets and colors."""
    runner = BarrierColoring(g, part, trace=True)
    runner.run()
    return runner.snapshots
