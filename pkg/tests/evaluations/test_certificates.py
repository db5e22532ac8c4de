"""Every certificate the library emits re-validates against its input."""

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from graph_core import Graph, is_connected
from orderability import decide_unique, find_buried, is_buried, validate_verdict
from recognition import recognize, validate_obstruction
from representation import ClosedRepresentation, verify_representation
from testing import SEEDS, interval_graphs


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.floats(min_value=0.1, max_value=0.9), SEEDS)
def test_recognition_certificates(n, p, seed) -> None:
    g = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    found = recognize(g)

    if isinstance(found, ClosedRepresentation):
        assert verify_representation(g, found)
    else:
        assert validate_obstruction(g, found)


@settings(max_examples=200, deadline=None)
@given(interval_graphs(min_n=2, max_n=20))
def test_verdict_certificates(drawn) -> None:
    g, _ = drawn
    verdict = decide_unique(g)

    assert validate_verdict(g, verdict)
    if verdict.buried is not None:
        check = is_buried(g, verdict.buried.B)
        assert check
        assert verdict.buried.witness_outside in check.R
        a, b = verdict.buried.witness_nonedge
        assert not g.adjacent(a, b)


@settings(max_examples=200, deadline=None)
@given(interval_graphs(min_n=2, max_n=20))
def test_buried_search_is_deterministic(drawn) -> None:
    g, _ = drawn
    if not is_connected(g):
        return

    assert find_buried(g) == find_buried(g)
