import threading

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parcolor.core.coloring import count_colors, sequential_color, verify_coloring
from parcolor.core.graph import Graph, generate_synthetic, max_degree
from parcolor.core.partition import partition_random, partition_uniform
from parcolor.parallel.locks import LOCK_MODES, LockColoring, LockTable, coarse_color, fine_color

from helpers import graphs, run_with_watchdog

COLORERS = {"coarse": coarse_color, "fine": fine_color}


@pytest.mark.parametrize("mode", LOCK_MODES)
def test_single_thread_equals_sequential(mode, gnp500):
    coloring = run_with_watchdog(lambda: COLORERS[mode](gnp500, partition_uniform(gnp500, 1)))
    assert np.array_equal(coloring.colors, sequential_color(gnp500).colors)


@pytest.mark.parametrize("mode", LOCK_MODES)
def test_single_edge_two_blocks(mode, single_edge):
    part = partition_uniform(single_edge, 2)
    for _ in range(100):
        coloring = run_with_watchdog(lambda: COLORERS[mode](single_edge, part))
        assert coloring.colors.tolist() in ([0, 1], [1, 0])


@pytest.mark.parametrize("mode", LOCK_MODES)
def test_triangle_across_three_blocks(mode):
    g = generate_synthetic("complete", (3,))
    part = partition_uniform(g, 3)
    for _ in range(1000):
        coloring = run_with_watchdog(lambda: COLORERS[mode](g, part))
        assert sorted(coloring.colors.tolist()) == [0, 1, 2]


@pytest.mark.parametrize("mode", LOCK_MODES)
@pytest.mark.parametrize("p", [2, 3, 4, 8])
def test_proper_and_within_palette(mode, p):
    g = generate_synthetic("gnp", (500, 0.02), seed=p)
    part = partition_uniform(g, p)
    for _ in range(10):
        coloring = run_with_watchdog(lambda: COLORERS[mode](g, part))
        assert verify_coloring(g, coloring).is_proper
        assert count_colors(coloring) <= max_degree(g) + 1


@pytest.mark.parametrize("mode", LOCK_MODES)
def test_every_vertex_written_once(mode):
    g = generate_synthetic("gnp", (800, 0.02), seed=9)
    part = partition_uniform(g, 8)
    runner = LockColoring(g, part, mode=mode, instrument=True)
    run_with_watchdog(runner.run)
    assert runner.write_counts.tolist() == [1] * g.n
    assert runner.table.violations == 0
    if mode == "fine":
        assert runner.table.acquired_sets == part.boundary_count


def test_fine_many_threads_no_deadlock():
    g = generate_synthetic("gnp", (2000, 0.01), seed=21)
    part = partition_uniform(g, 16)
    for _ in range(5):
        runner = LockColoring(g, part, mode="fine", instrument=True)
        coloring = run_with_watchdog(runner.run, timeout=60)
        assert verify_coloring(g, coloring).is_proper
        assert runner.table.violations == 0


@pytest.mark.parametrize("mode", LOCK_MODES)
def test_random_partition(mode):
    g = generate_synthetic("gnp", (400, 0.03), seed=6)
    coloring = run_with_watchdog(lambda: COLORERS[mode](g, partition_random(g, 4, seed=3)))
    assert verify_coloring(g, coloring).is_proper


def test_more_threads_than_vertices():
    g = Graph.from_edges(2, [(0, 1)])
    coloring = run_with_watchdog(lambda: fine_color(g, partition_uniform(g, 6)))
    assert verify_coloring(g, coloring).is_proper


def test_unknown_mode(path3):
    with pytest.raises(ValueError):
        LockColoring(path3, partition_uniform(path3, 2), mode="optimistic")


def test_partition_of_other_graph(path3, k4):
    with pytest.raises(ValueError):
        fine_color(k4, partition_uniform(path3, 2))


class TestLockTable:
    def test_locked_releases(self):
        table = LockTable(4)
        with table.locked([3, 1, 1, 2]) as order:
            assert order == [1, 2, 3]
            assert all(table.vertex_locks[v].locked() for v in order)
        assert not any(lock.locked() for lock in table.vertex_locks)

    def test_nested_acquisition_is_a_violation(self):
        table = LockTable(4, instrument=True)
        first = table.acquire_ordered([0, 1])
        second = table.acquire_ordered([3])
        table.release_all(second)
        table.release_all(first)
        assert table.violations == 1
        assert table.acquired_sets == 2

    def test_ordered_sets_are_clean(self):
        table = LockTable(5, instrument=True)
        for ids in ([4, 0, 2], [1], [3, 2]):
            with table.locked(ids):
                pass
        assert table.violations == 0
        assert table.acquired_sets == 3

    def test_held_follows_actual_acquisitions(self):
        table = LockTable(4, instrument=True)
        with table.locked([3, 2, 1, 0]):
            assert table.held() == [0, 1, 2, 3]
        assert table.held() == []
        assert table.violations == 0

    @pytest.mark.parametrize("sequence,expected", [
        ([3, 1], 1),
        ([0, 2, 1], 1),
        ([3, 2, 1, 0], 3),
        ([0, 1, 3], 0),
    ])
    def test_out_of_order_acquisition_is_a_violation(self, sequence, expected):
        table = LockTable(4, instrument=True)
        for v in sequence:
            table.acquire(v)
        assert table.held() == sequence
        assert table.violations == expected
        for v in sequence:
            table.release(v)
        assert not any(lock.locked() for lock in table.vertex_locks)

    def test_order_is_per_thread(self):
        table = LockTable(4, instrument=True)
        table.acquire(3)

        def take_lower():
            table.acquire(1)
            table.release(1)

        worker = threading.Thread(target=take_lower)
        worker.start()
        worker.join(5)
        table.release(3)
        assert table.violations == 0


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=40), st.integers(1, 6), st.sampled_from(LOCK_MODES))
def test_any_graph_any_thread_count(g, p, mode):
    coloring = run_with_watchdog(lambda: COLORERS[mode](g, partition_uniform(g, p)))
    assert coloring.is_complete
    assert verify_coloring(g, coloring).is_proper
    assert count_colors(coloring) <= max_degree(g) + 1
