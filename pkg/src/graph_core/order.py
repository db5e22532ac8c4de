"""Strict partial orders and their incomparability graphs."""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from common.errors import InputError
from graph_core.graph import Graph, graph_from_edges

Pair = tuple[int, int]


@dataclass(frozen=True)
class StrictPartialOrder:
    """An irreflexive, antisymmetric, transitive relation on ``0..n-1``.

    ``rel`` contains ``(u, v)`` exactly when ``u`` precedes ``v``. The relation
    is stored transitively closed; construction fails otherwise.
    """

    n: int
    rel: frozenset[Pair]

    def __post_init__(self):
        """Check the order axioms."""
        for u, v in self.rel:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"pair ({u}, {v}) lies outside 0..{self.n - 1}")
            if u == v:
                raise InputError(f"relation is not irreflexive at {u}")
            if (v, u) in self.rel:
                raise InputError(f"relation is not antisymmetric on ({u}, {v})")
        successors = self._successors
        for u, v in self.rel:
            missing = successors[v] - successors[u]
            if missing:
                w = min(missing)
                raise InputError(
                    f"relation is not transitive: {u} < {v} < {w} but not {u} < {w}"
                )

    @cached_property
    def _successors(self) -> tuple[frozenset[int], ...]:
        above: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.rel:
            above[u].add(v)
        return tuple(frozenset(s) for s in above)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "StrictPartialOrder":
        """Close ``pairs`` transitively and build the order.

        Raises:
            InputError: The closure contains a cycle.
        """
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(n))
        digraph.add_edges_from(pairs)
        closure = nx.transitive_closure(digraph, reflexive=False)
        return cls(n=n, rel=frozenset(closure.edges))

    @classmethod
    def antichain(cls, n: int) -> "StrictPartialOrder":
        """Return the empty order on ``n`` vertices."""
        return cls(n=n, rel=frozenset())

    def precedes(self, u: int, v: int) -> bool:
        """Return whether ``u`` precedes ``v``."""
        return (u, v) in self.rel

    def comparable(self, u: int, v: int) -> bool:
        """Return whether ``u`` and ``v`` are related either way."""
        return (u, v) in self.rel or (v, u) in self.rel

    def successors(self, v: int) -> frozenset[int]:
        """Return the vertices above ``v``."""
        return self._successors[v]

    def predecessors(self, v: int) -> frozenset[int]:
        """Return the vertices below ``v``."""
        return frozenset(u for u, w in self.rel if w == v)

    def dual(self) -> "StrictPartialOrder":
        """Return the reversed order."""
        return StrictPartialOrder(n=self.n, rel=frozenset((v, u) for u, v in self.rel))

    def restricted(self, vertices: Iterable[int]) -> frozenset[Pair]:
        """Return the pairs of the order with both ends in ``vertices``."""
        keep = set(vertices)
        return frozenset((u, v) for u, v in self.rel if u in keep and v in keep)

    def sorted_pairs(self) -> list[Pair]:
        """Return the relation as a sorted list."""
        return sorted(self.rel)


def incomparability_graph(o: StrictPartialOrder) -> Graph:
    """Return the graph joining distinct vertices that ``o`` leaves incomparable."""
    return graph_from_edges(
        o.n,
        (
            (u, v)
            for u in range(o.n)
            for v in range(u + 1, o.n)
            if not o.comparable(u, v)
        ),
    )


def is_associated(g: Graph, o: StrictPartialOrder) -> bool:
    """Return whether ``o`` is associated to ``g``, i.e. ``g`` is its incomparability graph.

    Raises:
        InputError: The vertex counts differ.
    """
    if g.n != o.n:
        raise InputError(f"graph has {g.n} vertices but order has {o.n}")
    return incomparability_graph(o) == g


__all__ = ["Pair", "StrictPartialOrder", "incomparability_graph", "is_associated"]
