"""Strategies shared by the property suites."""

from hypothesis import strategies as st

from gadgets import random_interval_graph
from graph_core import Graph
from representation import ClosedRepresentation

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def interval_graphs(
    draw, min_n: int = 1, max_n: int = 10
) -> tuple[Graph, ClosedRepresentation]:
    """Draw a random interval graph with its distinguishing representation."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return random_interval_graph(n, draw(SEEDS))
