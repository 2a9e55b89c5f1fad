import gzip

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from parcolor.core.errors import EdgeListParseError
from parcolor.core.graph import (Graph, generate_synthetic, load_edge_list, max_degree, parse_edge_list,
                                 parse_synthetic_spec, serialize_edge_list)

from helpers import graphs


def edge_set(g):
    return {tuple(e) for e in g.edges().tolist()}


def labeled_edge_set(g):
    return {frozenset((int(g.labels[u]), int(g.labels[v]))) for u, v in g.edges().tolist()}


class TestParseEdgeList:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2\n")
        assert g.n == 3
        assert edge_set(g) == {(0, 1), (1, 2)}

    def test_duplicates_reversals_and_loops(self):
        g = parse_edge_list("# c\n5 9\n9 5\n5 5\n")
        assert g.n == 2
        assert g.edge_count == 1
        assert g.labels.tolist() == [5, 9]
        assert edge_set(g) == {(0, 1)}

    def test_ids_follow_first_appearance(self):
        g = parse_edge_list("30 10\n10 20\n")
        assert g.labels.tolist() == [30, 10, 20]
        assert edge_set(g) == {(0, 1), (1, 2)}

    def test_tabs_blank_lines_and_comments(self):
        g = parse_edge_list("# Directed graph\n# Nodes: 3\n\n1\t2\n  2   3  \n")
        assert g.n == 3
        assert g.edge_count == 2

    def test_extra_columns_ignored(self):
        g = parse_edge_list("1 2 0.5\n2 3 1700000000\n")
        assert labeled_edge_set(g) == {frozenset((1, 2)), frozenset((2, 3))}

    @pytest.mark.parametrize("text", ["", "# only a comment\n", "\n\n"])
    def test_empty_input(self, text):
        g = parse_edge_list(text)
        assert g.n == 0
        assert g.edge_count == 0
        assert max_degree(g) == 0

    @pytest.mark.parametrize("text,line_no", [
        ("0 1\nx 2\n", 2),
        ("# header\n0 1\n7\n", 3),
        ("0 -1\n", 1),
        ("0 1\n1 2.5\n", 2),
        ("0 1\n1 99999999999999999999\n", 2),
        ("0 1\n1_000 2\n", 2),
        ("0 1\n2 +5\n", 2),
        ("0 1\n3 \u0663\n", 2),
        ("0 1\n1 -\n", 2),
    ])
    def test_malformed_line_reports_line_number(self, text, line_no):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line_no == line_no
        assert f"line {line_no}" in str(exc.value)

    def test_negative_id_is_named(self):
        with pytest.raises(EdgeListParseError, match="negative vertex id"):
            parse_edge_list("0 1\n4 -3\n")

    def test_largest_int64_id_is_accepted(self):
        big = 2**63 - 1
        g = parse_edge_list(f"0 {big}\n")
        assert g.labels.tolist() == [0, big]

    def test_matches_independent_pass(self):
        text = "\n".join(f"{u} {v}" for u, v in [
            (1000, 2), (2, 77), (77, 1000), (2, 1000), (5, 5), (31, 77), (400, 31), (77, 2), (9, 400), (9, 9)])
        g = parse_edge_list(text)
        expected = set()
        for line in text.splitlines():
            u, v = map(int, line.split())
            if u != v:
                expected.add(frozenset((u, v)))
        assert labeled_edge_set(g) == expected
        assert sorted(g.labels.tolist()) == [2, 9, 31, 77, 400, 1000]


class TestLoadEdgeList:
    def test_plain_file(self, tmp_path):
        path = tmp_path / "tiny.txt"
        path.write_text("# FromNodeId\tToNodeId\n0\t1\n1\t2\n2\t0\n")
        g = load_edge_list(path)
        assert g.n == 3
        assert g.edge_count == 3

    def test_gzip_file(self, tmp_path):
        path = tmp_path / "tiny.txt.gz"
        with gzip.open(path, "wt") as f:
            f.write("0 1\n1 2\n")
        assert load_edge_list(path).edge_count == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_edge_list(tmp_path / "nope.txt")


class TestGraph:
    def test_from_edges_rejects_bad_endpoint(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_arrays_are_read_only(self, path3):
        with pytest.raises(ValueError):
            path3.neighbors[0] = 2

    def test_neighbors_and_degrees(self, path3):
        assert path3.neighbors_of(1).tolist() == [0, 2]
        assert path3.degrees.tolist() == [1, 2, 1]
        assert path3.adjacency == [[1], [0, 2], [1]]
        assert path3.min_degree == 1

    def test_describe(self, k4):
        assert k4.describe() == {"n": 4, "edges": 6, "max_degree": 3, "min_degree": 3}

    def test_from_networkx_keeps_labels(self):
        G = nx.Graph([(10, 20), (20, 30)])
        g = Graph.from_networkx(G)
        assert labeled_edge_set(g) == {frozenset((10, 20)), frozenset((20, 30))}

    @settings(max_examples=200)
    @given(graphs())
    def test_csr_invariants(self, g):
        adj = g.adjacency
        for v in range(g.n):
            assert v not in adj[v]
            assert all(a < b for a, b in zip(adj[v], adj[v][1:]))
            for u in adj[v]:
                assert v in adj[u]
        assert g.offsets[0] == 0
        assert g.offsets[-1] == len(g.neighbors)
        assert 2 * g.edge_count == int(g.degrees.sum())

    @given(graphs())
    def test_max_degree(self, g):
        assert max_degree(g) == max((len(a) for a in g.adjacency), default=0)

    @given(graphs())
    def test_serialize_round_trip(self, g):
        again = parse_edge_list(serialize_edge_list(g))
        assert labeled_edge_set(again) == labeled_edge_set(g)


class TestMaxDegree:
    def test_examples(self):
        assert max_degree(generate_synthetic("complete", (3,))) == 2
        star = Graph.from_edges(6, [(0, v) for v in range(1, 6)])
        assert max_degree(star) == 5
        assert max_degree(Graph.from_edges(7, [])) == 0


class TestSynthetic:
    def test_complete(self, k4):
        assert k4.edge_count == 6
        assert max_degree(k4) == 3

    def test_cycle(self):
        g = generate_synthetic("cycle", (5,))
        assert g.edge_count == 5
        assert g.degrees.tolist() == [2] * 5

    def test_path_and_bipartite(self):
        assert generate_synthetic("path", (4,)).edge_count == 3
        g = generate_synthetic("bipartite", (2, 3))
        assert g.n == 5
        assert g.edge_count == 6

    def test_gnp_is_deterministic(self):
        a = generate_synthetic("gnp", (300, 0.05), seed=7)
        b = generate_synthetic("gnp", (300, 0.05), seed=7)
        c = generate_synthetic("gnp", (300, 0.05), seed=8)
        assert np.array_equal(a.neighbors, b.neighbors)
        assert np.array_equal(a.offsets, b.offsets)
        assert not np.array_equal(a.neighbors, c.neighbors)

    @pytest.mark.parametrize("kind,params", [
        ("gnp", (10, 1.5)),
        ("gnp", (10, -0.1)),
        ("cycle", (-3,)),
        ("path", (2.5,)),
        ("complete", (3, 4)),
        ("hypercube", (3,)),
    ])
    def test_invalid_parameters(self, kind, params):
        with pytest.raises(ValueError):
            generate_synthetic(kind, params)

    def test_parse_synthetic_spec(self):
        assert parse_synthetic_spec("gnp:5000,0.004:1") == ("gnp", (5000, 0.004), 1)
        assert parse_synthetic_spec("cycle:10") == ("cycle", (10,), 0)
        with pytest.raises(ValueError):
            parse_synthetic_spec("cycle")
        with pytest.raises(ValueError):
            parse_synthetic_spec("gnp:ten,0.1")
