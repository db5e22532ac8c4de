import pytest

from common.errors import InputError
from gadgets import (
    connected_interval_graphs,
    random_injective_prefix,
    random_interval_graph,
    random_interval_order,
    random_representation,
)
from graph_core import is_connected
from representation import is_interval_order, verify_representation


class TestRandomCorpus:
    """Tests for the seeded random generators."""

    def test_random_interval_graph_is_deterministic(self):
        """The same seed gives the same graph."""
        first = random_interval_graph(5, 42)
        second = random_interval_graph(5, 42)

        assert first == second
        assert first[0].n == 5

    def test_random_representation_is_distinguishing(self):
        """Endpoints are a permutation of 0..2n-1."""
        for seed in range(20):
            r = random_representation(8, seed)

            assert r.is_distinguishing()
            assert sorted(r.left + r.right) == list(range(16))

    def test_random_interval_graph_matches_its_representation(self):
        """The graph is the one the intervals induce."""
        for seed in range(20):
            g, r = random_interval_graph(9, seed)

            assert verify_representation(g, r)

    def test_random_interval_order(self):
        """Random interval orders have no 2+2."""
        assert is_interval_order(random_interval_order(10, 3))

    @pytest.mark.parametrize("n", [0, -2])
    def test_random_representation_rejects_empty(self, n):
        """At least one interval is required."""
        with pytest.raises(InputError):
            random_representation(n, 0)

    def test_random_injective_prefix(self):
        """Distinct values below 3n, reproducible from the seed."""
        f = random_injective_prefix(6, 7)

        assert len(f) == 6
        assert len(set(f)) == 6
        assert all(0 <= v < 18 for v in f)
        assert f == random_injective_prefix(6, 7)
        assert random_injective_prefix(0, 7) == ()
        with pytest.raises(InputError):
            random_injective_prefix(-1, 7)


class TestConnectedIntervalGraphs:
    """Tests for connected_interval_graphs."""

    def test_counts(self):
        """Nine connected and seventeen total interval graphs on up to four vertices."""
        graphs = connected_interval_graphs(4)

        assert len(graphs) == 9
        assert all(is_connected(g) for g in graphs)
        assert len(connected_interval_graphs(4, include_disconnected=True)) == 17

    def test_stops_at_the_atlas(self):
        """The atlas ends at seven vertices."""
        with pytest.raises(InputError):
            connected_interval_graphs(8)
