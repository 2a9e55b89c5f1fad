"""Immutable CSR graph, SNAP edge-list ingestion and synthetic generators"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/graph.ipynb.

# %% auto #0
__all__ = ['SYNTHETIC_KINDS', 'Graph', 'parse_edge_list', 'load_edge_list', 'serialize_edge_list', 'max_degree',
           'generate_synthetic', 'parse_synthetic_spec']

# %% ../../nbs/core/graph.ipynb #0c6f3a51
import gzip
import io
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple, Union

import networkx as nx
import numpy as np
import scipy.sparse as sp

from .errors import EdgeListParseError

logger = logging.getLogger(__name__)

# %% ../../nbs/core/graph.ipynb #8d2b4c07
@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph in compressed sparse row layout.

    Vertex ids are dense `0..n-1`; `labels[v]` is the id the vertex had in its source.
    All arrays are read-only once built, so a Graph can be shared by any number of threads.
    """
    offsets: np.ndarray  # n+1 row pointers into `neighbors`
    neighbors: np.ndarray  # Concatenated adjacency lists, each sorted strictly increasing
    labels: np.ndarray  # Original vertex id for every dense id

    def __post_init__(self):
        for arr in (self.offsets, self.neighbors, self.labels):
            arr.setflags(write=False)

    @property
    def n(self) -> int:  # Number of vertices
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:  # Number of undirected edges
        return len(self.neighbors) // 2

    @cached_property
    def degrees(self) -> np.ndarray:  # Degree of every vertex
        return np.diff(self.offsets)

    @property
    def min_degree(self) -> int:  # δ, 0 for the empty graph
        return int(self.degrees.min()) if self.n else 0

    def neighbors_of(self,
                     v: int  # Dense vertex id
                     ) -> np.ndarray:  # Sorted neighbor ids (read-only view)
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    @cached_property
    def adjacency(self) -> List[List[int]]:  # Per-vertex neighbor lists as plain Python lists
        flat = self.neighbors.tolist()
        bounds = self.offsets.tolist()
        return [flat[bounds[v]:bounds[v + 1]] for v in range(self.n)]

    def edges(self) -> np.ndarray:  # (edge_count, 2) array of (u, v) pairs with u < v
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self.neighbors
        return np.column_stack((src[mask], self.neighbors[mask]))

    def describe(self) -> Dict[str, int]:  # Summary used for logging and result metadata
        return {"n": self.n, "edges": self.edge_count,
                "max_degree": max_degree(self), "min_degree": self.min_degree}

    @classmethod
    def from_edges(
        cls,
        n: int,  # Vertex count
        edges: Union[np.ndarray, Sequence[Tuple[int, int]]],  # Dense-id pairs, any orientation, duplicates allowed
        labels: Optional[Sequence[int]] = None  # Original ids; defaults to 0..n-1
    ) -> "Graph":
        """Build a graph, symmetrizing the edges and dropping self-loops and duplicates."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        labels = np.arange(n, dtype=np.int64) if labels is None else np.asarray(labels, dtype=np.int64)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        pairs = pairs[pairs[:, 0] != pairs[:, 1]]
        if n == 0 or len(pairs) == 0:
            return cls(np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64), labels)
        if pairs.min() < 0 or pairs.max() >= n:
            raise ValueError(f"edge endpoint outside [0, {n})")
        rows = np.concatenate((pairs[:, 0], pairs[:, 1]))
        cols = np.concatenate((pairs[:, 1], pairs[:, 0]))
        adj = sp.coo_array((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)).tocsr()
        adj.sum_duplicates()
        adj.sort_indices()
        return cls(adj.indptr.astype(np.int64), adj.indices.astype(np.int64), labels)

    @classmethod
    def from_networkx(
        cls,
        G: nx.Graph  # Undirected networkx graph with integer nodes
    ) -> "Graph":
        """Convert a networkx graph, numbering vertices in node iteration order."""
        nodes = list(G.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = np.array([(index[u], index[v]) for u, v in G.edges()], dtype=np.int64).reshape(-1, 2)
        return cls.from_edges(len(nodes), edges, labels=nodes)

# %% ../../nbs/core/graph.ipynb #f61a9e30
_MAX_ID = int(np.iinfo(np.int64).max)

def _read_pairs(
    stream: TextIO  # Edge-list text
) -> List[int]:  # Flat [u0, v0, u1, v1, ...] of raw ids
    raw: List[int] = []
    for line_no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise EdgeListParseError(line_no, f"expected two vertex ids, got {line!r}")
        # extra columns (weights, timestamps) are ignored
        for token in tokens[:2]:
            if token.startswith("-") and token[1:].isascii() and token[1:].isdigit():
                raise EdgeListParseError(line_no, f"negative vertex id: {token!r}")
            # ascii decimal digits only: no signs, underscores or other scripts
            if not (token.isascii() and token.isdigit()):
                raise EdgeListParseError(line_no, f"not a vertex id: {token!r}")
            value = int(token)
            if value > _MAX_ID:
                raise EdgeListParseError(line_no, f"vertex id {token} exceeds {_MAX_ID}")
            raw.append(value)
    return raw

# %% ../../nbs/core/graph.ipynb #3b7e55d8
def parse_edge_list(
    text: Union[str, TextIO]  # Edge-list text or an open text stream
) -> Graph:  # Graph with ids remapped to first-appearance order
    """Parse a SNAP-style edge list: `#` comments, one whitespace-separated pair per line."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    raw = np.asarray(_read_pairs(stream), dtype=np.int64)
    if raw.size == 0:
        return Graph.from_edges(0, [])
    uniq, first_seen, inverse = np.unique(raw, return_index=True, return_inverse=True)
    order = np.argsort(first_seen, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    dense = rank[inverse].reshape(-1, 2)
    return Graph.from_edges(len(uniq), dense, labels=uniq[order])

# %% ../../nbs/core/graph.ipynb #9a41d2e6
def load_edge_list(
    path: Union[str, Path]  # Edge-list file, gzip-compressed when it ends in .gz
) -> Graph:
    """Read an edge-list file from disk."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt", encoding="utf-8") as f:
        g = parse_edge_list(f)
    logger.info("loaded %s: %s", path.name, g.describe())
    return g

# %% ../../nbs/core/graph.ipynb #e27b0c94
def serialize_edge_list(
    g: Graph  # Graph to write
) -> str:  # One "u v" line per undirected edge, original labels, u < v by dense id
    labels = g.labels
    return "".join(f"{labels[u]} {labels[v]}\n" for u, v in g.edges().tolist())

# %% ../../nbs/core/graph.ipynb #4d80f3ab
def max_degree(
    g: Graph  # Graph to inspect
) -> int:  # Δ, 0 for edgeless or empty graphs
    return int(g.degrees.max()) if g.n else 0

# %% ../../nbs/core/graph.ipynb #c5a1e7f2
def _size(s: float) -> int:
    if int(s) != s or s < 0:
        raise ValueError(f"sizes must be non-negative integers, got {s}")
    return int(s)

def _gnp(n: float, prob: float, seed: int) -> nx.Graph:
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {prob}")
    return nx.fast_gnp_random_graph(_size(n), prob, seed=seed)

# kind -> (parameter count, builder(*params, seed))
SYNTHETIC_KINDS: Dict[str, Tuple[int, Any]] = {
    "path": (1, lambda n, seed: nx.path_graph(_size(n))),
    "cycle": (1, lambda n, seed: nx.cycle_graph(_size(n))),
    "complete": (1, lambda n, seed: nx.complete_graph(_size(n))),
    "bipartite": (2, lambda a, b, seed: nx.complete_bipartite_graph(_size(a), _size(b))),
    "gnp": (2, _gnp),
}

# %% ../../nbs/core/graph.ipynb #71f0d8b5
def generate_synthetic(
    kind: str,  # One of path, cycle, complete, bipartite, gnp
    params: Sequence[float],  # Sizes, plus the edge probability for gnp
    seed: int = 0  # Random seed (only gnp is random)
) -> Graph:  # Deterministic for fixed (kind, params, seed)
    """Generate a desk-scale test graph."""
    if kind not in SYNTHETIC_KINDS:
        raise ValueError(f"unknown synthetic kind {kind!r}; expected one of {sorted(SYNTHETIC_KINDS)}")
    arity, build = SYNTHETIC_KINDS[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return Graph.from_networkx(build(*params, seed))

# %% ../../nbs/core/graph.ipynb #b8e3c461
def parse_synthetic_spec(
    spec: str  # "kind:p1,p2,...[:seed]", e.g. "gnp:5000,0.004:1"
) -> Tuple[str, Tuple[float, ...], int]:  # (kind, params, seed)
    parts = spec.split(":")
    if len(parts) not in (2, 3) or not parts[1]:
        raise ValueError(f"synthetic spec must look like kind:params[:seed], got {spec!r}")
    try:
        params = tuple(float(x) if "." in x or "e" in x.lower() else int(x) for x in parts[1].split(","))
        seed = int(parts[2]) if len(parts) == 3 else 0
    except ValueError:
        raise ValueError(f"bad number in synthetic spec {spec!r}") from None
    return parts[0], params, seed
