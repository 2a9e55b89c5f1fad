"""Command-line entry points: `parcolor bench` and `parcolor color`"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/bench/cli.ipynb.

# %% auto #0
__all__ = ['parse_threads', 'bench', 'color', 'main']

# %% ../../nbs/bench/cli.ipynb #39c6ba48
import logging
import sys
from typing import List

from fastcore.script import Param, call_parse, store_true

from ..core.errors import ParcolorError, VerificationError
from ..storage.file_storage import ResultStorage
from .config import BenchConfig
from .registry import default_registry
from .runner import load_graph, run_benchmark, run_once

logger = logging.getLogger(__name__)

# %% ../../nbs/bench/cli.ipynb #10f9f0ee
def parse_threads(
    spec: str  # Comma-separated thread counts, e.g. "1,2,4,8"
) -> List[int]:
    try:
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"thread counts must be integers, got {spec!r}") from None

def _setup_logging(level: str):
    logging.basicConfig(level=level.upper(), format="%(asctime)s %(levelname)s %(name)s: %(message)s")

def _fail(e: Exception) -> None:
    logger.error("%s", e)
    if isinstance(e, VerificationError):
        # one "u v" line per monochromatic edge
        for u, v in e.report.conflicts:
            print(f"{u} {v}", file=sys.stderr)
    sys.exit(1)

# %% ../../nbs/bench/cli.ipynb #67931351
@call_parse
def bench(
    input: str = None,  # SNAP-style edge-list file
    synthetic: str = None,  # Synthetic graph "kind:params[:seed]", e.g. gnp:5000,0.004:1
    algo: str = None,  # Algorithm: seq, barrier, coarse or fine
    threads: str = None,  # Comma-separated thread counts, e.g. 1,2,4,8
    reps: int = None,  # Timed repetitions per thread count (default 10)
    verify: Param("Verify every coloring (untimed)", store_true) = False,
    baseline: Param("Also time the sequential baseline and report speedups", store_true) = False,
    partition: str = None,  # contiguous or random
    seed: int = None,  # Seed for random partitioning
    out: str = None,  # Results file (default: timestamped file in the results directory)
    format: str = None,  # csv or json
    config: str = None,  # JSON settings file
    log_level: str = "info",  # Logging level
):
    "Time a coloring algorithm over a thread-count sweep and write the results."
    _setup_logging(log_level)
    try:
        cfg = BenchConfig.from_saved_config(
            config, input_path=input, synthetic=synthetic, algorithm=algo,
            threads=parse_threads(threads) if threads else None, repetitions=reps,
            verify=verify or None, baseline=baseline or None, partition=partition, seed=seed,
            out_path=out, format=format)
        results = run_benchmark(cfg)
        ResultStorage(cfg.output).save(results)
    except (ParcolorError, OSError, ValueError) as e:
        _fail(e)

# %% ../../nbs/bench/cli.ipynb #df329132
@call_parse
def color(
    input: str = None,  # SNAP-style edge-list file
    synthetic: str = None,  # Synthetic graph "kind:params[:seed]"
    algo: str = None,  # Algorithm: seq, barrier, coarse or fine
    threads: int = None,  # Thread count
    verify: Param("Verify the coloring", store_true) = False,
    partition: str = None,  # contiguous or random
    seed: int = None,  # Seed for random partitioning
    out: str = None,  # Coloring file of "vertex_id color" lines
    config: str = None,  # JSON settings file
    log_level: str = "info",  # Logging level
):
    "Color a graph once and write the coloring with original vertex ids."
    _setup_logging(log_level)
    try:
        cfg = BenchConfig.from_saved_config(
            config, input_path=input, synthetic=synthetic, algorithm=algo,
            threads=[threads] if threads is not None else None, repetitions=1, verify=verify or None,
            partition=partition, seed=seed, coloring_path=out)
        g = load_graph(cfg)
        info = default_registry.get_algorithm(cfg.algorithm)
        run, elapsed = run_once(g, info, cfg.threads[0], cfg)
        logger.info("%s p=%d colored %d vertices in %.6fs", info.name, cfg.threads[0], g.n, elapsed)
        ResultStorage(cfg.output).save_coloring(g, run.coloring)
    except (ParcolorError, OSError, ValueError) as e:
        _fail(e)

# %% ../../nbs/bench/cli.ipynb #a241f5eb
_COMMANDS = {"bench": bench, "color": color}

def main():
    "Dispatch `parcolor <command> ...` to the matching subcommand."
    if len(sys.argv) < 2 or sys.argv[1] not in _COMMANDS:
        print(f"usage: parcolor {{{','.join(_COMMANDS)}}} [options]", file=sys.stderr)
        sys.exit(2)
    command = sys.argv.pop(1)
    sys.argv[0] = f"parcolor {command}"
    _COMMANDS[command]()
