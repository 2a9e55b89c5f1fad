"""Palette, first-fit selection, sequential baseline and coloring verification"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/coloring.ipynb.

# %% auto #0
__all__ = ['UNSET', 'Coloring', 'ConflictReport', 'first_fit', 'sequential_color', 'verify_coloring', 'count_colors',
           'color_classes', 'export_coloring', 'write_coloring']

# %% ../../nbs/core/coloring.ipynb #2f71c0ae
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

from .errors import IncompleteColoringError, PaletteExhaustedError
from .graph import Graph, max_degree

# %% ../../nbs/core/coloring.ipynb #e4a05d19
UNSET = -1  # Color of a vertex that has not been colored yet

# %% ../../nbs/core/coloring.ipynb #0b93d7c2
@dataclass
class Coloring:
    """Per-vertex colors over the palette {0, ..., m}, m being the maximum degree.

    Each cell is written by one thread at a time; the calling algorithm provides the synchronization.
    """
    colors: np.ndarray  # Color per vertex, UNSET until assigned
    palette_size: int  # m + 1

    @classmethod
    def empty(cls,
              g: Graph  # Graph to be colored
              ) -> "Coloring":  # All vertices UNSET
        return cls(np.full(g.n, UNSET, dtype=np.int64), max_degree(g) + 1)

    @property
    def m(self) -> int:  # Highest color of the palette
        return self.palette_size - 1

    @property
    def is_complete(self) -> bool:  # True when no vertex is UNSET
        return not bool((self.colors == UNSET).any())

# %% ../../nbs/core/coloring.ipynb #7c5e8f14
@dataclass
class ConflictReport:
    """Monochromatic edges found by `verify_coloring`, each as (u, v) with u < v."""
    conflicts: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def is_proper(self) -> bool:
        return not self.conflicts

    def __len__(self) -> int:
        return len(self.conflicts)

# %% ../../nbs/core/coloring.ipynb #a36d19b8
def first_fit(
    forbidden: Union[np.ndarray, Iterable[int]],  # Colors of already-colored neighbors; UNSET entries are ignored
    m: int  # Highest color of the palette
) -> int:  # Least color in [0, m] that is not forbidden
    """Pick the smallest legal color."""
    taken = forbidden if isinstance(forbidden, np.ndarray) else np.fromiter(forbidden, dtype=np.int64)
    taken = np.unique(taken[(taken >= 0) & (taken <= m)])
    gaps = np.flatnonzero(taken != np.arange(len(taken)))
    color = int(gaps[0]) if len(gaps) else len(taken)
    if color > m:
        raise PaletteExhaustedError(f"all {m + 1} colors are forbidden")
    return color

# %% ../../nbs/core/coloring.ipynb #5d8e2b60
def sequential_color(
    g: Graph  # Graph to color
) -> Coloring:  # Proper coloring using at most Δ+1 colors
    """Greedy first-fit coloring visiting vertices in increasing id order."""
    c = Coloring.empty(g)
    colors, m = c.colors, c.m
    for v in range(g.n):
        colors[v] = first_fit(colors[g.neighbors_of(v)], m)
    return c

# %% ../../nbs/core/coloring.ipynb #c1f7d3a4
def verify_coloring(
    g: Graph,  # Colored graph
    c: Coloring  # Coloring to check; every vertex must be assigned
) -> ConflictReport:  # Every monochromatic edge; empty iff the coloring is proper
    unset = np.flatnonzero(c.colors == UNSET)
    if len(unset):
        raise IncompleteColoringError(int(unset[0]))
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    dst = g.neighbors
    bad = (src < dst) & (c.colors[src] == c.colors[dst])
    return ConflictReport(list(zip(src[bad].tolist(), dst[bad].tolist())))

# %% ../../nbs/core/coloring.ipynb #e8b40c57
def count_colors(
    c: Coloring  # Complete coloring
) -> int:  # Number of distinct colors in use
    return len(np.unique(c.colors[c.colors != UNSET]))

# %% ../../nbs/core/coloring.ipynb #43a6f9e1
def color_classes(
    c: Coloring  # Complete coloring
) -> Dict[int, List[int]]:  # Color -> ascending vertex ids (each class is an independent set)
    classes: Dict[int, List[int]] = {}
    for v, color in enumerate(c.colors.tolist()):
        if color != UNSET:
            classes.setdefault(color, []).append(v)
    return dict(sorted(classes.items()))

# %% ../../nbs/core/coloring.ipynb #9f2d6b83
def export_coloring(
    g: Graph,  # Colored graph, supplies the original vertex labels
    c: Coloring  # Coloring to export
) -> str:  # "vertex_id color" lines with original ids, sorted by id
    order = np.argsort(g.labels, kind="stable")
    return "".join(f"{label} {color}\n" for label, color in zip(g.labels[order].tolist(), c.colors[order].tolist()))

def write_coloring(
    g: Graph,  # Colored graph
    c: Coloring,  # Coloring to export
    path: Union[str, Path]  # Destination text file
) -> Path:  # Path written
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(export_coloring(g, c), encoding="utf-8")
    return path
