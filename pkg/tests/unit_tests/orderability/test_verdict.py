import importlib

import pytest
from hypothesis import given, settings

from common.errors import InternalInconsistencyError, NotIntervalGraphError
from gadgets.named import complete3, cycle4, diamond, empty3, named_graphs, path4, star3, two_k2
from graph_core import StrictPartialOrder, graph_from_edges, is_connected
from orderability import UniquenessVerdict, decide_unique, validate_verdict
from orderability.output import VerdictModel
from testing import interval_graphs


class TestDecideUnique:
    """Tests for decide_unique."""

    def test_diamond_is_unique(self):
        """The diamond has one order up to reversal."""
        verdict = decide_unique(diamond())

        assert verdict.unique
        assert verdict.wq_components == 2
        assert verdict.order is not None
        assert verdict.order.rel == frozenset({(0, 2)})
        assert verdict.witness is None

    def test_path4_is_unique(self):
        """P4 has one order up to reversal."""
        verdict = decide_unique(path4())

        assert verdict.unique
        assert verdict.order == StrictPartialOrder.from_pairs(4, [(0, 2), (0, 3), (1, 3)])

    def test_complete_graph_takes_the_antichain(self):
        """A complete graph has only the antichain."""
        verdict = decide_unique(complete3())

        assert verdict == UniquenessVerdict(
            unique=True, wq_components=0, order=StrictPartialOrder.antichain(3)
        )

    def test_star_is_not_unique(self):
        """The star carries a buried pair and two orders."""
        verdict = decide_unique(star3())

        assert not verdict.unique
        assert verdict.wq_components == 6
        assert verdict.buried is not None
        assert verdict.buried.B == frozenset({1, 2})
        assert verdict.witness is not None
        assert verdict.witness.triple == (1, 2, 3)

    def test_two_disjoint_cliques_are_unique(self):
        """Two complete components can only be stacked."""
        verdict = decide_unique(two_k2())

        assert verdict.unique
        assert verdict.wq_components == 2
        assert verdict.order == StrictPartialOrder.from_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)])

    def test_three_components_swap_two_blocks(self):
        """Three components give two orders differing in the first two blocks."""
        verdict = decide_unique(empty3())

        assert not verdict.unique
        assert verdict.buried is None
        assert verdict.witness is not None
        assert verdict.witness.order1.rel == frozenset({(0, 1), (0, 2), (1, 2)})
        assert verdict.witness.order2.rel == frozenset({(1, 0), (0, 2), (1, 2)})
        assert verdict.witness.triple == (0, 1, 2)

    def test_two_components_one_not_complete(self):
        """A non-complete component reverses inside while the other stays put."""
        g = graph_from_edges(4, [(0, 1), (1, 2)])

        verdict = decide_unique(g)

        assert not verdict.unique
        assert verdict.witness is not None
        assert verdict.witness.triple[2] == 3
        assert validate_verdict(g, verdict)

    def test_not_interval_graph_carries_the_obstruction(self):
        """Non-interval graphs raise with their obstruction."""
        with pytest.raises(NotIntervalGraphError) as info:
            decide_unique(cycle4())
        assert info.value.obstruction.cycle == (0, 1, 2, 3)

    def test_disagreeing_criteria_are_an_internal_error(self, monkeypatch):
        """A missing buried subgraph next to many components is a bug."""
        module = importlib.import_module("orderability.verdict")
        monkeypatch.setattr(module, "find_buried", lambda g: None)

        with pytest.raises(InternalInconsistencyError):
            decide_unique(star3())

    def test_named_graph_verdicts(self):
        """Each named interval graph gets its documented verdict."""
        for named in named_graphs():
            if named.interval:
                assert decide_unique(named.graph).unique == named.unique, named.name

    @settings(max_examples=300, deadline=None)
    @given(interval_graphs(min_n=1, max_n=10))
    def test_random_verdicts_validate(self, drawn):
        """Verdicts on random interval graphs carry valid certificates."""
        g, _ = drawn
        verdict = decide_unique(g)

        assert validate_verdict(g, verdict)
        if is_connected(g) and not g.is_complete():
            assert verdict.unique == (verdict.wq_components == 2)


class TestValidateVerdict:
    """Tests for validate_verdict."""

    @pytest.mark.parametrize(
        "verdict",
        [
            UniquenessVerdict(unique=True, wq_components=2),
            UniquenessVerdict(
                unique=True,
                wq_components=2,
                order=StrictPartialOrder.from_pairs(4, [(0, 1), (1, 2), (2, 3)]),
            ),
            UniquenessVerdict(unique=False, wq_components=2),
        ],
    )
    def test_rejects(self, verdict):
        """Missing or wrong certificates do not validate."""
        assert not validate_verdict(path4(), verdict)


class TestVerdictModel:
    """Tests for VerdictModel."""

    def test_names_the_order(self):
        """The order prints as label pairs."""
        g = diamond()

        model = VerdictModel.from_verdict(g, decide_unique(g))

        assert model.model_dump(exclude_none=True) == {
            "unique": True,
            "order": [["a", "c"]],
            "wq_components": 2,
        }
