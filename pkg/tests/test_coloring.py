import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from parcolor.core.coloring import (UNSET, Coloring, color_classes, count_colors, export_coloring, first_fit,
                                    sequential_color, verify_coloring, write_coloring)
from parcolor.core.errors import IncompleteColoringError, PaletteExhaustedError
from parcolor.core.graph import Graph, generate_synthetic, max_degree, parse_edge_list

from helpers import graphs, greedy_oracle


def colored(g, colors):
    return Coloring(np.asarray(colors, dtype=np.int64), max_degree(g) + 1)


class TestFirstFit:
    @pytest.mark.parametrize("forbidden,m,expected", [
        ([], 0, 0),
        ([0, 1, 3], 3, 2),
        ([1, 2], 2, 0),
        ([0, 1, 2], 3, 3),
        ([2, 0, 0, 1], 3, 3),
        ([UNSET, 0, UNSET], 2, 1),
    ])
    def test_examples(self, forbidden, m, expected):
        assert first_fit(forbidden, m) == expected
        assert first_fit(np.array(forbidden, dtype=np.int64), m) == expected

    @pytest.mark.parametrize("m", range(0, 11))
    def test_least_free_color_by_exhaustion(self, m):
        palette = range(m + 1)
        for size in range(m + 1):
            for subset in itertools.combinations(palette, size):
                c = first_fit(list(subset), m)
                assert c not in subset
                assert 0 <= c <= m
                assert all(k in subset for k in range(c))

    def test_full_palette_raises(self):
        with pytest.raises(PaletteExhaustedError):
            first_fit([0, 1, 2], 2)


class TestSequential:
    def test_path(self, path3):
        assert sequential_color(path3).colors.tolist() == [0, 1, 0]

    def test_complete(self, k4):
        c = sequential_color(k4)
        assert c.colors.tolist() == [0, 1, 2, 3]
        assert count_colors(c) == 4

    def test_star_center_last(self):
        g = Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)])
        assert sequential_color(g).colors.tolist() == [0, 0, 0, 1]

    def test_empty_graph(self):
        c = sequential_color(Graph.from_edges(0, []))
        assert len(c.colors) == 0
        assert c.is_complete

    def test_matches_networkx_and_independent_greedy(self):
        for seed in range(100):
            g = generate_synthetic("gnp", (50, 0.2), seed=seed)
            G = nx.Graph()
            G.add_nodes_from(range(g.n))
            G.add_edges_from(g.edges().tolist())
            nx_colors = nx.greedy_color(G, strategy=lambda G, colors: sorted(G))
            expected = greedy_oracle(g)
            got = sequential_color(g).colors.tolist()
            assert got == expected
            assert got == [nx_colors[v] for v in range(g.n)]

    @given(graphs())
    def test_proper_within_palette_and_pure(self, g):
        a, b = sequential_color(g), sequential_color(g)
        assert np.array_equal(a.colors, b.colors)
        assert a.is_complete
        assert verify_coloring(g, a).is_proper
        assert count_colors(a) <= max_degree(g) + 1


class TestVerify:
    def test_examples(self, single_edge, path3):
        assert verify_coloring(single_edge, colored(single_edge, [0, 1])).is_proper
        report = verify_coloring(single_edge, colored(single_edge, [0, 0]))
        assert report.conflicts == [(0, 1)]
        assert len(verify_coloring(path3, colored(path3, [1, 1, 1]))) == 2

    def test_incomplete_coloring(self, path3):
        with pytest.raises(IncompleteColoringError) as exc:
            verify_coloring(path3, colored(path3, [0, UNSET, 0]))
        assert exc.value.vertex == 1

    def test_agrees_with_brute_force(self):
        rng = np.random.default_rng(0)
        g = generate_synthetic("gnp", (200, 0.05), seed=2)
        for _ in range(20):
            c = colored(g, rng.integers(0, 4, size=g.n))
            expected = sorted((u, v) for u, v in g.edges().tolist() if c.colors[u] == c.colors[v])
            assert sorted(verify_coloring(g, c).conflicts) == expected


class TestSummaries:
    def test_count_colors(self):
        assert count_colors(sequential_color(generate_synthetic("cycle", (10,)))) == 2
        assert count_colors(sequential_color(generate_synthetic("cycle", (9,)))) == 3
        assert count_colors(sequential_color(Graph.from_edges(9, []))) == 1

    def test_color_classes_are_independent(self, gnp500):
        c = sequential_color(gnp500)
        classes = color_classes(c)
        assert list(classes) == sorted(classes)
        assert sum(len(vs) for vs in classes.values()) == gnp500.n
        for vs in classes.values():
            members = set(vs)
            assert not any(u in members for v in vs for u in gnp500.adjacency[v])

    def test_export_uses_original_ids(self, tmp_path):
        g = parse_edge_list("30 10\n10 20\n")
        c = sequential_color(g)
        assert export_coloring(g, c) == "10 1\n20 0\n30 0\n"
        path = write_coloring(g, c, tmp_path / "out" / "coloring.txt")
        assert path.read_text() == "10 1\n20 0\n30 0\n"
