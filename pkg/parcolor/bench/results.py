"""Benchmark result records and their CSV/JSON serialization"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/bench/results.ipynb.

# %% auto #0
__all__ = ['CSV_COLUMNS', 'BenchResult', 'emit_results', 'parse_results']

# %% ../../nbs/bench/results.ipynb #723593dc
import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Union

# %% ../../nbs/bench/results.ipynb #0a4be2d7
CSV_COLUMNS = ("algorithm", "p", "mean_time_s", "colors", "rounds", "speedup")

# %% ../../nbs/bench/results.ipynb #7824cb65
@dataclass
class BenchResult:
    """Timing, color and round statistics for one (algorithm, thread count, graph) combination."""
    algorithm: str  # Registry name of the algorithm
    p: int  # Thread count (1 for the sequential baseline)
    mean_time_s: float  # Arithmetic mean of times_s
    times_s: List[float] = field(default_factory=list)  # Wall time of each repetition
    colors: List[int] = field(default_factory=list)  # Colors used in each repetition
    rounds: Optional[List[int]] = None  # Rounds of each repetition, round-based algorithms only
    speedup: Optional[float] = None  # Sequential mean time / mean_time_s, when a baseline was measured
    graph: str = ""  # Input file name or synthetic spec
    n: int = 0  # Vertex count
    edge_count: int = 0  # Undirected edge count
    max_degree: int = 0  # Δ of the graph
    partition: str = "contiguous"  # Partitioning kind used

    @property
    def max_colors(self) -> int:  # Worst color count over the repetitions
        return max(self.colors)

    @property
    def max_rounds(self) -> Optional[int]:  # Worst round count, None when not reported
        return max(self.rounds) if self.rounds else None

# %% ../../nbs/bench/results.ipynb #4cd9e01b
def _csv(results: Sequence[BenchResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in results:
        writer.writerow([
            r.algorithm,
            r.p,
            f"{r.mean_time_s:.9f}",
            r.max_colors,
            "" if r.max_rounds is None else r.max_rounds,
            "" if r.speedup is None else f"{r.speedup:.6f}",
        ])
    return buf.getvalue()

# %% ../../nbs/bench/results.ipynb #a07b53ce
def emit_results(
    results: Sequence[BenchResult],  # Results to serialize, at least one
    fmt: str = "csv"  # "csv" or "json"
) -> bytes:  # UTF-8 encoded document with a fixed field order
    if not results:
        raise ValueError("no results to emit")
    if fmt == "csv":
        return _csv(results).encode("utf-8")
    if fmt == "json":
        return json.dumps([asdict(r) for r in results], indent=2).encode("utf-8")
    raise ValueError(f"unknown result format {fmt!r}; expected csv or json")

# %% ../../nbs/bench/results.ipynb #e51f3a88
def parse_results(
    data: Union[bytes, str],  # Document produced by emit_results(..., "json")
) -> List[BenchResult]:
    """Restore BenchResult records from their JSON form."""
    return [BenchResult(**item) for item in json.loads(data)]
