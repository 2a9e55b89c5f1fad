"""Registry mapping algorithm names to their runners"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/bench/registry.ipynb.

# %% auto #0
__all__ = ['DEFAULT_ALGORITHMS', 'AlgorithmRegistry', 'default_registry']

# %% ../../nbs/bench/registry.ipynb #9aaa3a78
from typing import Dict, Iterable, List, Optional

from ..core.coloring import sequential_color
from ..core.graph import Graph
from ..core.partition import Partitioning
from ..core.protocols import AlgorithmInfo, AlgorithmRun
from ..parallel.barrier import barrier_color
from ..parallel.locks import coarse_color, fine_color

# %% ../../nbs/bench/registry.ipynb #2d71e9c3
def _run_seq(g: Graph, part: Optional[Partitioning]) -> AlgorithmRun:
    return AlgorithmRun(sequential_color(g))

def _run_barrier(g: Graph, part: Optional[Partitioning]) -> AlgorithmRun:
    coloring, stats = barrier_color(g, part)
    return AlgorithmRun(coloring, stats.rounds)

def _run_coarse(g: Graph, part: Optional[Partitioning]) -> AlgorithmRun:
    return AlgorithmRun(coarse_color(g, part))

def _run_fine(g: Graph, part: Optional[Partitioning]) -> AlgorithmRun:
    return AlgorithmRun(fine_color(g, part))

DEFAULT_ALGORITHMS = (
    AlgorithmInfo("seq", "Sequential first fit", _run_seq, needs_partition=False),
    AlgorithmInfo("barrier", "Barrier synchronization", _run_barrier, reports_rounds=True),
    AlgorithmInfo("coarse", "Coarse-grained locking", _run_coarse),
    AlgorithmInfo("fine", "Fine-grained locking", _run_fine),
)

# %% ../../nbs/bench/registry.ipynb #947bbfd8
class AlgorithmRegistry:
    """Looks up coloring algorithms by their command-line name."""

    def __init__(self,
                 algorithms: Iterable[AlgorithmInfo] = DEFAULT_ALGORITHMS  # Algorithms to expose
                 ):
        self._algorithms: Dict[str, AlgorithmInfo] = {a.name: a for a in algorithms}

    def names(self) -> List[str]:  # Registered names in registration order
        return list(self._algorithms)

    def list_algorithms(self) -> List[AlgorithmInfo]:  # AlgorithmInfo of every registered algorithm
        return list(self._algorithms.values())

    def get_algorithm(self,
                      name: str  # Command-line name (e.g., "barrier")
                      ) -> Optional[AlgorithmInfo]:  # AlgorithmInfo if registered, None otherwise
        return self._algorithms.get(name)

    def register(self,
                 info: AlgorithmInfo  # Algorithm to add or replace
                 ) -> None:
        self._algorithms[info.name] = info

default_registry = AlgorithmRegistry()
