"""Seeded random interval graphs and the exhaustive small-graph corpus."""

import random

import networkx as nx

from common.errors import InputError
from common.logging import get_logger
from graph_core import Graph, StrictPartialOrder, is_connected
from recognition import is_interval_graph
from representation import (
    ClosedRepresentation,
    induced_graph,
    normalize_distinguishing,
    representation_to_order,
)

logger = get_logger(__name__)

ATLAS_MAX_N = 7
"""The networkx graph atlas lists every graph up to this many vertices."""


def random_representation(n: int, seed: int) -> ClosedRepresentation:
    """Draw ``n`` intervals with endpoints on a grid of size ``2n`` and make them distinguishing.

    Raises:
        InputError: ``n`` is smaller than 1.
    """
    if n < 1:
        raise InputError(f"need at least one interval, got n={n}")
    rng = random.Random(seed)
    intervals = []
    for _ in range(n):
        lo, hi = sorted((rng.randrange(2 * n), rng.randrange(2 * n)))
        intervals.append((lo, hi))
    return normalize_distinguishing(ClosedRepresentation.from_intervals(intervals))


def random_interval_graph(n: int, seed: int) -> tuple[Graph, ClosedRepresentation]:
    """Return a random interval graph on ``n`` vertices with a distinguishing representation.

    Raises:
        InputError: ``n`` is smaller than 1.
    """
    r = random_representation(n, seed)
    return induced_graph(r), r


def random_interval_order(n: int, seed: int) -> StrictPartialOrder:
    """Return the interval order of a random representation on ``n`` vertices."""
    return representation_to_order(random_representation(n, seed))


def random_injective_prefix(length: int, seed: int) -> tuple[int, ...]:
    """Return ``length`` distinct naturals below ``3 * length`` in random order."""
    if length < 0:
        raise InputError(f"prefix length must be non-negative, got {length}")
    rng = random.Random(seed)
    return tuple(rng.sample(range(max(1, 3 * length)), length))


def connected_interval_graphs(
    max_n: int, *, include_disconnected: bool = False
) -> list[Graph]:
    """Return every interval graph on 1 to ``max_n`` vertices up to isomorphism.

    Graphs are taken from the networkx atlas in atlas order and are connected
    unless ``include_disconnected`` is set.

    Raises:
        InputError: ``max_n`` exceeds the atlas.
    """
    if max_n > ATLAS_MAX_N:
        raise InputError(f"the graph atlas stops at {ATLAS_MAX_N} vertices, got {max_n}")
    found = []
    for atlas_graph in nx.graph_atlas_g():
        if not 1 <= atlas_graph.number_of_nodes() <= max_n:
            continue
        g = Graph.from_networkx(atlas_graph)
        if not include_disconnected and not is_connected(g):
            continue
        if is_interval_graph(g):
            found.append(g)
    logger.debug(f"{len(found)} interval graphs with at most {max_n} vertices")
    return found


__all__ = [
    "ATLAS_MAX_N",
    "connected_interval_graphs",
    "random_injective_prefix",
    "random_interval_graph",
    "random_interval_order",
    "random_representation",
]
