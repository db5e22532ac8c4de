import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from common.errors import InputError
from gadgets.named import complete3, empty3, path4
from graph_core import (
    StrictPartialOrder,
    graph_from_edges,
    incomparability_graph,
    is_associated,
)
from testing import SEEDS


class TestStrictPartialOrder:
    """Tests for StrictPartialOrder."""

    def test_from_pairs_closes_transitively(self):
        """The generating pairs are closed transitively."""
        o = StrictPartialOrder.from_pairs(3, [(0, 1), (1, 2)])

        assert o.rel == frozenset({(0, 1), (1, 2), (0, 2)})

    def test_from_pairs_rejects_cycles(self):
        """A cycle in the generating pairs is an input error."""
        with pytest.raises(InputError):
            StrictPartialOrder.from_pairs(2, [(0, 1), (1, 0)])

    @pytest.mark.parametrize(
        "rel",
        [
            {(0, 0)},
            {(0, 1), (1, 0)},
            {(0, 1), (1, 2)},
            {(0, 3)},
        ],
    )
    def test_order_axioms_are_checked(self, rel):
        """Reflexive, symmetric, intransitive or out-of-range relations are refused."""
        with pytest.raises(InputError):
            StrictPartialOrder(n=3, rel=frozenset(rel))

    def test_queries(self):
        """Precedence, comparability, neighbors and restriction."""
        o = StrictPartialOrder.from_pairs(4, [(0, 2), (0, 3), (1, 3)])

        assert o.precedes(0, 2)
        assert not o.precedes(2, 0)
        assert o.comparable(3, 1)
        assert not o.comparable(1, 2)
        assert o.successors(0) == frozenset({2, 3})
        assert o.predecessors(3) == frozenset({0, 1})
        assert o.restricted([0, 1, 3]) == frozenset({(0, 3), (1, 3)})
        assert o.sorted_pairs() == [(0, 2), (0, 3), (1, 3)]

    def test_dual_reverses_every_pair(self):
        """The dual of the dual is the order itself."""
        o = StrictPartialOrder.from_pairs(3, [(0, 1), (1, 2)])

        assert o.dual().rel == frozenset({(1, 0), (2, 1), (2, 0)})
        assert o.dual().dual() == o
        assert StrictPartialOrder.antichain(3).dual() == StrictPartialOrder.antichain(3)


class TestIncomparabilityGraph:
    """Tests for incomparability_graph and is_associated."""

    def test_incomparability_graph(self):
        """Chains, antichains and the 2+2."""
        chain = StrictPartialOrder.from_pairs(3, [(0, 1), (1, 2)])
        two_plus_two = StrictPartialOrder.from_pairs(4, [(0, 1), (2, 3)])

        assert incomparability_graph(chain) == empty3()
        assert incomparability_graph(StrictPartialOrder.antichain(3)) == complete3()
        assert incomparability_graph(two_plus_two) == graph_from_edges(
            4, [(0, 2), (1, 2), (0, 3), (1, 3)]
        )

    @given(st.integers(min_value=1, max_value=9), SEEDS)
    def test_dual_has_the_same_incomparability_graph(self, n, seed):
        """Reversing an order keeps every incomparable pair incomparable."""
        rng = random.Random(seed)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
        o = StrictPartialOrder.from_pairs(n, pairs)

        assert incomparability_graph(o.dual()) == incomparability_graph(o)
        assert is_associated(incomparability_graph(o), o.dual())

    def test_is_associated(self):
        """An order is associated when its incomparability graph is the graph."""
        assert is_associated(complete3(), StrictPartialOrder.antichain(3))
        assert is_associated(path4(), StrictPartialOrder.from_pairs(4, [(0, 2), (0, 3), (1, 3)]))
        assert not is_associated(path4(), StrictPartialOrder.from_pairs(4, [(2, 0), (0, 3), (1, 3)]))

    def test_is_associated_size_mismatch(self):
        """Graph and order must share their vertex count."""
        with pytest.raises(InputError):
            is_associated(path4(), StrictPartialOrder.antichain(3))
