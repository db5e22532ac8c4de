"""The pair graph (W, Q) of an interval graph.

``W`` holds the ordered pairs of distinct non-adjacent vertices; ``ab Q cd``
holds when ``a`` is adjacent to ``c`` and ``b`` to ``d`` (reflexively). Two pairs
in the same component are related by the closure of ``Q``.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
from networkx.utils import UnionFind

from common.errors import InputError
from common.logging import get_logger
from graph_core import Graph, Pair
from recognition import least_shortest_path

logger = get_logger(__name__)


@dataclass(frozen=True)
class WQGraph:
    """``W`` with its ``Q`` components labelled canonically.

    Component ``i`` is the ``i``-th component when components are ordered by
    their least pair, so component 0 holds the least pair of ``W``.
    """

    base: Graph
    pairs: tuple[Pair, ...]
    component_of: Mapping[Pair, int] = field(compare=False, hash=False)

    @property
    def component_count(self) -> int:
        """Return the number of ``Q`` components."""
        return len(set(self.component_of.values()))

    def members(self, component: int) -> list[Pair]:
        """Return the sorted pairs of ``component``."""
        return [p for p in self.pairs if self.component_of[p] == component]

    def q_adjacent(self, ab: Pair, cd: Pair) -> bool:
        """Return whether ``ab Q cd``."""
        (a, b), (c, d) = ab, cd
        return self.base.adjacent(a, c) and self.base.adjacent(b, d)

    def q_neighbors(self, ab: Pair) -> list[Pair]:
        """Return the pairs of ``W`` other than ``ab`` that are ``Q``-adjacent to it, sorted."""
        a, b = ab
        g = self.base
        return sorted(
            (c, d)
            for c in g.closed_neighborhood(a)
            for d in g.closed_neighborhood(b)
            if (c, d) != ab and c != d and not g.adjacent(c, d)
        )

    @cached_property
    def q_graph(self) -> nx.Graph:
        """Return ``(W, Q)`` without its loops as a networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.pairs)
        for ab in self.pairs:
            for cd in self.q_neighbors(ab):
                if ab < cd:
                    graph.add_edge(ab, cd)
        return graph

    def same_component(self, ab: Pair, cd: Pair) -> bool:
        """Return whether ``ab`` and ``cd`` are joined by a ``Q``-path."""
        return self.component_of[ab] == self.component_of[cd]


def build_wq(g: Graph) -> WQGraph:
    """Enumerate ``W`` and label its ``Q`` components with a union-find."""
    pairs = tuple(
        (a, b) for a in g.vertices for b in g.vertices if a != b and not g.adjacent(a, b)
    )
    members = set(pairs)
    forest = UnionFind(pairs)
    for a, b in pairs:
        for c in g.closed_neighborhood(a):
            for d in g.closed_neighborhood(b):
                if (c, d) in members:
                    forest.union((a, b), (c, d))

    roots = {}
    for p in pairs:
        roots.setdefault(forest[p], p)
    # pairs are sorted, so the first pair met in each class is its least member
    canonical = {root: i for i, root in enumerate(roots)}
    component_of = {p: canonical[forest[p]] for p in pairs}
    wq = WQGraph(base=g, pairs=pairs, component_of=component_of)
    logger.debug(f"|W| = {len(pairs)}, {wq.component_count} components")
    return wq


def q_path(wq: WQGraph, ab: Pair, cd: Pair) -> list[Pair] | None:
    """Return the lexicographically least shortest ``Q``-path from ``ab`` to ``cd``.

    Raises:
        InputError: A pair is not in ``W``.
    """
    for p in (ab, cd):
        if p not in wq.component_of:
            raise InputError(f"pair {p} is not a non-adjacent ordered pair of distinct vertices")
    if not wq.same_component(ab, cd):
        return None
    return list(least_shortest_path(wq.q_graph, ab, cd))


__all__ = ["WQGraph", "build_wq", "q_path"]
