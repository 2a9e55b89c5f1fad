"""Benchmark protocol: untimed load, timed partition + coloring, untimed verification"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/bench/runner.ipynb.

# %% auto #0
__all__ = ['Clock', 'load_graph', 'make_partition', 'run_once', 'measure', 'run_benchmark']

# %% ../../nbs/bench/runner.ipynb #a92b5b2b
import logging
import time
from statistics import fmean
from typing import Callable, List, Optional, Tuple

from ..core.coloring import count_colors, verify_coloring
from ..core.errors import VerificationError
from ..core.graph import Graph, generate_synthetic, load_edge_list, max_degree, parse_synthetic_spec
from ..core.partition import Partitioning, partition_random, partition_uniform
from ..core.protocols import AlgorithmInfo, AlgorithmRun
from .config import BenchConfig
from .registry import AlgorithmRegistry, default_registry
from .results import BenchResult

logger = logging.getLogger(__name__)

Clock = Callable[[], float]  # Monotonic clock returning seconds

# %% ../../nbs/bench/runner.ipynb #9c67ed9d
def load_graph(
    cfg: BenchConfig  # Benchmark configuration naming the input
) -> Graph:
    """Read or generate the input graph. Never timed."""
    if cfg.input_path:
        return load_edge_list(cfg.input_path)
    kind, params, seed = parse_synthetic_spec(cfg.synthetic)
    g = generate_synthetic(kind, params, seed)
    logger.info("generated %s: %s", cfg.synthetic, g.describe())
    return g

# %% ../../nbs/bench/runner.ipynb #2334b3d5
def make_partition(
    g: Graph,  # Graph to split
    p: int,  # Block count
    kind: str = "contiguous",  # "contiguous" or "random"
    seed: int = 0  # Seed for random partitioning
) -> Partitioning:
    if kind == "random":
        return partition_random(g, p, seed)
    return partition_uniform(g, p)

# %% ../../nbs/bench/runner.ipynb #d9f5f764
def run_once(
    g: Graph,  # Loaded graph
    info: AlgorithmInfo,  # Algorithm to run
    p: int,  # Thread count, ignored by sequential algorithms
    cfg: BenchConfig,  # Partitioning and verification settings
    clock: Clock = time.perf_counter  # Clock bracketing the timed window
) -> Tuple[AlgorithmRun, float]:  # Finished run and its elapsed seconds
    """One timed run: the window covers partitioning, classification and coloring."""
    start = clock()
    part = make_partition(g, p, cfg.partition, cfg.seed) if info.needs_partition else None
    run = info.runner(g, part)
    elapsed = clock() - start
    if cfg.verify:
        report = verify_coloring(g, run.coloring)
        if not report.is_proper:
            raise VerificationError(report, f"{info.name} p={p}")
    return run, elapsed

# %% ../../nbs/bench/runner.ipynb #de0e1102
def measure(
    g: Graph,  # Loaded graph
    info: AlgorithmInfo,  # Algorithm to run
    p: int,  # Thread count
    cfg: BenchConfig,  # Repetitions and run settings
    clock: Clock = time.perf_counter  # Clock bracketing each timed window
) -> BenchResult:  # Statistics over cfg.repetitions back-to-back runs
    times, colors, rounds = [], [], []
    for _ in range(cfg.repetitions):
        run, elapsed = run_once(g, info, p, cfg, clock)
        times.append(elapsed)
        colors.append(count_colors(run.coloring))
        rounds.append(run.rounds)
    result = BenchResult(
        algorithm=info.name,
        p=p,
        mean_time_s=fmean(times),
        times_s=times,
        colors=colors,
        rounds=rounds if info.reports_rounds else None,
        graph=cfg.source_label,
        n=g.n,
        edge_count=g.edge_count,
        max_degree=max_degree(g),
        partition=cfg.partition if info.needs_partition else "none",
    )
    logger.info("%s p=%d: mean %.6fs over %d reps, colors %d", info.name, p, result.mean_time_s,
                cfg.repetitions, result.max_colors)
    return result

# %% ../../nbs/bench/runner.ipynb #c91d692e
def run_benchmark(
    cfg: BenchConfig,  # What to load, run and how often
    clock: Clock = time.perf_counter,  # Injectable clock for the timed window
    registry: Optional[AlgorithmRegistry] = None  # Algorithm lookup, default_registry when None
) -> List[BenchResult]:  # One result per (algorithm, p); the baseline first when measured
    """Run the benchmark protocol described by `cfg`."""
    registry = registry or default_registry
    info = registry.get_algorithm(cfg.algorithm)
    if info is None:
        raise ValueError(f"unknown algorithm {cfg.algorithm!r}")
    g = load_graph(cfg)

    results: List[BenchResult] = []
    sequential = not info.needs_partition
    if sequential or cfg.baseline:
        seq_info = info if sequential else registry.get_algorithm("seq")
        results.append(measure(g, seq_info, 1, cfg, clock))
    if not sequential:
        results.extend(measure(g, info, p, cfg, clock) for p in cfg.threads)

    if sequential or cfg.baseline:
        base = results[0].mean_time_s
        for r in results:
            r.speedup = base / r.mean_time_s if r.mean_time_s > 0 else None
    return results
