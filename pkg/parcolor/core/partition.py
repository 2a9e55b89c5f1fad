"""Vertex partitioning into per-thread blocks and internal/boundary classification"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/partition.ipynb.

# %% auto #0
__all__ = ['Partitioning', 'partition_uniform', 'partition_random']

# %% ../../nbs/core/partition.ipynb #6a1c04f2
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from .graph import Graph

# %% ../../nbs/core/partition.ipynb #d09b7e35
@dataclass(frozen=True, eq=False)
class Partitioning:
    """Assignment of every vertex to one of `p` blocks, plus the boundary flags.

    A vertex is a boundary vertex when at least one of its neighbors lives in another block.
    """
    p: int  # Number of blocks
    block_of: np.ndarray  # Block index of every vertex
    members: Tuple[np.ndarray, ...]  # Sorted vertex ids of each block
    is_boundary: np.ndarray  # Per-vertex boundary flag
    bounds: Optional[np.ndarray] = None  # p+1 block start offsets when blocks are contiguous id ranges

    def __post_init__(self):
        for arr in (self.block_of, self.is_boundary, *self.members):
            arr.setflags(write=False)

    @property
    def n(self) -> int:  # Number of partitioned vertices
        return len(self.block_of)

    @property
    def contiguous(self) -> bool:  # True when every block is an id interval
        return self.bounds is not None

    def block_range(self,
                    i: int  # Block index
                    ) -> range:  # Id interval owned by block i
        if self.bounds is None:
            raise ValueError("block ranges only exist for contiguous partitionings")
        return range(int(self.bounds[i]), int(self.bounds[i + 1]))

    def internal_of(self,
                    i: int  # Block index
                    ) -> np.ndarray:  # Internal vertices of block i, ascending
        block = self.members[i]
        return block[~self.is_boundary[block]]

    def boundary_of(self,
                    i: int  # Block index
                    ) -> np.ndarray:  # Boundary vertices of block i, ascending
        block = self.members[i]
        return block[self.is_boundary[block]]

    @cached_property
    def boundary_count(self) -> int:  # Total number of boundary vertices
        return int(self.is_boundary.sum())

    def check_matches(self,
                      g: Graph  # Graph the partitioning is about to be used with
                      ) -> None:
        """Raise if this partitioning was built for a graph of a different size."""
        if self.n != g.n:
            raise ValueError(f"partitioning covers {self.n} vertices but the graph has {g.n}")

# %% ../../nbs/core/partition.ipynb #83e5f1c6
def _classify(
    g: Graph,  # Graph being partitioned
    block_of: np.ndarray  # Block index per vertex
) -> np.ndarray:  # Boundary flag per vertex
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    cross = block_of[src] != block_of[g.neighbors]
    is_boundary = np.zeros(g.n, dtype=bool)
    is_boundary[src[cross]] = True
    return is_boundary

# %% ../../nbs/core/partition.ipynb #1fd7a8e0
def partition_uniform(
    g: Graph,  # Graph to split
    p: int  # Number of blocks, at least 1
) -> Partitioning:  # Contiguous id blocks, remainder in the last block
    """Split ids into `p` contiguous blocks of ⌊n/p⌋ vertices; the last block absorbs the remainder.

    With more blocks than vertices, block i owns vertex i and the surplus blocks stay empty.
    """
    if p < 1:
        raise ValueError(f"block count must be at least 1, got {p}")
    n = g.n
    size = max(n // p, 1)
    bounds = np.minimum(np.arange(p + 1, dtype=np.int64) * size, n)
    bounds[p] = n
    block_of = np.repeat(np.arange(p, dtype=np.int64), np.diff(bounds))
    members = tuple(np.arange(bounds[i], bounds[i + 1], dtype=np.int64) for i in range(p))
    return Partitioning(p, block_of, members, _classify(g, block_of), bounds)

# %% ../../nbs/core/partition.ipynb #b47c2d91
def partition_random(
    g: Graph,  # Graph to split
    p: int,  # Number of blocks, at least 1
    seed: int = 0  # Seed for the block assignment
) -> Partitioning:  # Non-contiguous blocks, each vertex placed uniformly at random
    if p < 1:
        raise ValueError(f"block count must be at least 1, got {p}")
    rng = np.random.default_rng(seed)
    block_of = rng.integers(0, p, size=g.n, dtype=np.int64)
    members = tuple(np.flatnonzero(block_of == i).astype(np.int64) for i in range(p))
    return Partitioning(p, block_of, members, _classify(g, block_of))
