"""Strategies and oracles shared by the test modules."""
import itertools
import threading

from hypothesis import strategies as st

from parcolor.core.graph import Graph


@st.composite
def graphs(draw, max_n=30):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Graph.from_edges(n, [])
    vertex = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), max_size=4 * n))
    return Graph.from_edges(n, edges)


def greedy_oracle(g):
    """First fit in id order over a dict of colors, written without the library."""
    colors = {}
    for v in range(g.n):
        used = {colors[u] for u in g.adjacency[v] if u in colors}
        colors[v] = next(c for c in itertools.count() if c not in used)
    return [colors[v] for v in range(g.n)]


def brute_force_boundary(g, block_of):
    return [any(block_of[u] != block_of[v] for u in g.adjacency[v]) for v in range(g.n)]


def run_with_watchdog(fn, timeout=60.0):
    """Run fn in a daemon thread; fail if it does not finish within timeout seconds."""
    box = {}

    def target():
        try:
            box["value"] = fn()
        except BaseException as e:
            box["error"] = e

    t = threading.Thread(target=target, daemon=True)
    t.start()
    t.join(timeout)
    assert not t.is_alive(), f"run did not finish within {timeout}s"
    if "error" in box:
        raise box["error"]
    return box["value"]
