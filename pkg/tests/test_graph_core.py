"""Tests for explicit graphs, distances, balls and schedule verification."""

import pytest

from src.exceptions import InputError
from src.graphs.bitset import mask_of, members, popcount
from src.graphs.explicit import (
    UNREACHABLE,
    BallIndex,
    BurningSchedule,
    ExplicitGraph,
    all_pairs_distances,
    ball,
    greedy_schedule,
    is_connected,
    verify_schedule,
)
from src.graphs.generators import complete_graph, cycle_graph, path_graph
from src.hamming.params import HammingParams, word_to_index


class TestExplicitGraph:
    """Test cases for ExplicitGraph construction."""

    def test_from_edges(self):
        g = ExplicitGraph.from_edges(3, [(0, 1), (1, 2), (1, 0)])
        assert g.vertex_count == 3
        assert g.edge_count == 2
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(InputError, match="symmetric"):
            ExplicitGraph(2, (frozenset({1}), frozenset()))

    def test_rejects_self_loop(self):
        with pytest.raises(InputError, match="self-loop"):
            ExplicitGraph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            ExplicitGraph.from_edges(2, [(0, 2)])

    def test_with_edge(self, p4):
        g = p4.with_edge(0, 3)
        assert g.edge_count == 4
        assert 3 in g.adjacency[0]
        assert p4.edge_count == 3

    def test_generators(self):
        assert path_graph(1).edge_count == 0
        assert cycle_graph(5).edge_count == 5
        assert complete_graph(4).edge_count == 6
        with pytest.raises(InputError):
            cycle_graph(2)
        with pytest.raises(InputError):
            path_graph(0)


class TestBitset:
    """Test cases for int-backed vertex masks."""

    def test_mask_round_trip(self):
        mask = mask_of([5, 0, 3])
        assert mask == 0b101001
        assert list(members(mask)) == [0, 3, 5]
        assert popcount(mask) == 3

    def test_negative_vertex(self):
        with pytest.raises(ValueError):
            mask_of([-1])


class TestDistances:
    """Test cases for all-pairs distances."""

    def test_path_distance(self):
        d = all_pairs_distances(path_graph(3))
        assert d(0, 2) == 2

    def test_identity(self, hamming_3_3):
        d = all_pairs_distances(hamming_3_3)
        assert all(d(v, v) == 0 for v in range(hamming_3_3.vertex_count))

    def test_hamming_words(self, hamming_3_3):
        p = HammingParams(3, 3)
        d = all_pairs_distances(hamming_3_3)
        assert d(word_to_index(p, (0, 0, 0)), word_to_index(p, (1, 2, 1))) == 3

    def test_symmetric_and_triangle(self):
        g = cycle_graph(7)
        d = all_pairs_distances(g)
        n = g.vertex_count
        for u in range(n):
            for v in range(n):
                assert d(u, v) == d(v, u)
                for w in range(n):
                    assert d(u, w) <= d(u, v) + d(v, w)

    def test_disconnected_sentinel(self):
        g = ExplicitGraph.from_edges(3, [(0, 1)])
        d = all_pairs_distances(g)
        assert d(0, 2) == UNREACHABLE
        assert not d.is_connected()
        assert not is_connected(g)

    def test_diameter(self):
        assert all_pairs_distances(cycle_graph(6)).diameter() == 3


class TestBall:
    """Test cases for k-balls."""

    def test_radius_zero(self, p4):
        assert ball(p4, 2, 0) == frozenset({2})

    def test_path_radius_one(self, p4):
        assert ball(p4, 1, 1) == frozenset({0, 1, 2})

    def test_hamming_ball(self, hamming_3_3):
        assert len(ball(hamming_3_3, 13, 2)) == 19

    def test_negative_radius_is_empty(self, p4):
        assert ball(p4, 0, -1) == frozenset()

    def test_invalid_vertex(self, p4):
        with pytest.raises(InputError):
            ball(p4, 4, 1)

    def test_index_matches_ball(self):
        g = cycle_graph(8)
        index = BallIndex(g)
        for v in range(g.vertex_count):
            for r in range(6):
                assert set(members(index.mask(v, r))) == ball(g, v, r)
        assert index.max_volume(2) == 5


class TestVerifySchedule:
    """Test cases for burning-schedule verification."""

    def test_covering_schedule(self, p4):
        result = verify_schedule(p4, BurningSchedule((1, 3)))
        assert result
        assert result.uncovered_count == 0

    def test_non_covering_schedule(self, p4):
        result = verify_schedule(p4, BurningSchedule((0, 1)))
        assert not result
        assert result.uncovered == frozenset({2, 3})
        assert result.uncovered_count + result.covered_count == 4

    def test_single_vertex(self, single_vertex):
        assert verify_schedule(single_vertex, BurningSchedule((0,)))

    def test_repeated_sources_allowed(self, p4):
        assert verify_schedule(p4, BurningSchedule((1, 1, 3)))

    def test_invalid_vertex(self, p4):
        with pytest.raises(InputError):
            verify_schedule(p4, BurningSchedule((0, 9)))

    def test_empty_schedule(self):
        with pytest.raises(InputError):
            BurningSchedule(())

    def test_radii(self):
        assert BurningSchedule((4, 2, 7)).radii() == (2, 1, 0)


class TestGreedySchedule:
    """Test cases for the greedy heuristic."""

    def test_complete_two(self):
        g = complete_graph(2)
        schedule = greedy_schedule(g, 2)
        assert schedule.sources == (0, 1)
        assert verify_schedule(g, schedule)

    def test_path_nine(self, p9):
        schedule = greedy_schedule(p9, 3)
        assert schedule.length == 3
        assert verify_schedule(p9, schedule)

    def test_single_source_does_not_cover(self, p4):
        schedule = greedy_schedule(p4, 1)
        assert schedule.sources == (0,)
        assert not verify_schedule(p4, schedule)

    def test_invalid_length(self, p4):
        with pytest.raises(InputError):
            greedy_schedule(p4, 0)
