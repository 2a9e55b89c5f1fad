"""Protocol and metadata types shared by the coloring algorithms"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/protocols.ipynb.

# %% auto #0
__all__ = ['AlgorithmRun', 'ColoringRunner', 'AlgorithmInfo']

# %% ../../nbs/core/protocols.ipynb #9de8b7db
from dataclasses import dataclass
from typing import Optional, Protocol, runtime_checkable

from .coloring import Coloring
from .graph import Graph
from .partition import Partitioning

# %% ../../nbs/core/protocols.ipynb #3a7c9e10
@dataclass
class AlgorithmRun:
    """Outcome of one coloring run."""
    coloring: Coloring  # Finished coloring
    rounds: Optional[int] = None  # Iterations executed, for round-based algorithms only

# %% ../../nbs/core/protocols.ipynb #f13f62c7
@runtime_checkable
class ColoringRunner(Protocol):
    """Anything that colors a graph given a partitioning (ignored by sequential runners)."""

    def __call__(self,
                 g: Graph,  # Graph to color
                 part: Optional[Partitioning]  # Per-thread blocks, None for sequential runners
                 ) -> AlgorithmRun:
        ...

# %% ../../nbs/core/protocols.ipynb #bfc3fd60
@dataclass(frozen=True)
class AlgorithmInfo:
    """Information about a registered coloring algorithm."""
    name: str  # Short name used on the command line (e.g., "fine")
    title: str  # Display title (e.g., "Fine-grained locking")
    runner: ColoringRunner  # Callable performing one run
    needs_partition: bool = True  # Whether the timed window includes partitioning
    reports_rounds: bool = False  # Whether runs report an iteration count
