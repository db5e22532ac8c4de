"""Finite reflexive graphs on dense vertex indices."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from common.errors import InputError
from common.logging import get_logger

logger = get_logger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite graph whose adjacency is read reflexively.

    Vertices are ``0..n-1``. ``edges`` holds unordered pairs normalized to
    ``(u, v)`` with ``u < v``; self loops are never stored, yet
    :meth:`adjacent` answers ``True`` for ``(v, v)``.
    """

    n: int
    edges: frozenset[Edge]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False, hash=False)
    """Display names; vertices without a label print as their index."""

    @property
    def vertices(self) -> range:
        """Return the vertex indices."""
        return range(self.n)

    @cached_property
    def _neighbors(self) -> tuple[frozenset[int], ...]:
        adjacency: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return tuple(frozenset(s) for s in adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        """Return the open neighborhood of ``v``."""
        return self._neighbors[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """Return ``v`` together with its neighbors."""
        return self._neighbors[v] | {v}

    def adjacent(self, u: int, v: int) -> bool:
        """Reflexive adjacency: every vertex is adjacent to itself."""
        return u == v or v in self._neighbors[u]

    def degree(self, v: int) -> int:
        """Return the number of neighbors of ``v`` other than itself."""
        return len(self._neighbors[v])

    def non_edges(self) -> list[Edge]:
        """Return the pairs ``u < v`` of distinct non-adjacent vertices, sorted."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self._neighbors[u]
        ]

    def is_complete(self) -> bool:
        """Return whether every two vertices are adjacent."""
        return len(self.edges) == self.n * (self.n - 1) // 2

    def label(self, v: int) -> str | int:
        """Return the display name of ``v``."""
        return self.labels.get(v, v)

    def to_networkx(self) -> nx.Graph:
        """Return the irreflexive networkx view of the graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph, relabelling nodes densely in sorted order."""
        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in graph.edges if u != v]
        return graph_from_edges(len(nodes), edges)


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def graph_from_edges(
    n: int, edge_list: Iterable[Edge], labels: Mapping[int, str] | None = None
) -> Graph:
    """Build a graph on ``n`` vertices from a list of pairs.

    Args:
        n: Number of vertices.
        edge_list: Pairs of endpoints, in any orientation; duplicates collapse.
        labels: Optional display names keyed by vertex index.

    Raises:
        InputError: An endpoint is out of range or a pair is a self loop.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    edges: set[Edge] = set()
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(
                f"explicit self loop on {u}: adjacency is reflexive already"
            )
        edges.add(_normalize(u, v))
    labels = dict(labels or {})
    for v in labels:
        if not 0 <= v < n:
            raise InputError(f"label for unknown vertex {v}")
    return Graph(n=n, edges=frozenset(edges), labels=labels)


def components(g: Graph) -> list[frozenset[int]]:
    """Return the connected components, sorted by least element."""
    parts = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=min)


def is_connected(g: Graph) -> bool:
    """Return whether ``g`` has exactly one component."""
    return len(components(g)) == 1


def complement(g: Graph) -> Graph:
    """Return the complementary graph; labels are kept."""
    return Graph(n=g.n, edges=frozenset(g.non_edges()), labels=dict(g.labels))


def universal_vertices(g: Graph) -> frozenset[int]:
    """Return the vertices adjacent to every other vertex."""
    return frozenset(v for v in g.vertices if g.degree(v) == g.n - 1)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Return the subgraph induced by ``keep``, relabelled densely in increasing order.

    Labels follow their vertices; unlabelled vertices receive their old index as
    label so that certificates on the subgraph still name the original vertices.
    """
    kept = sorted(set(keep))
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    labels = {index[v]: str(g.label(v)) for v in kept}
    return graph_from_edges(len(kept), edges, labels)


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Return ``g`` without the vertices in ``drop``."""
    dropped = set(drop)
    return induced_subgraph(g, (v for v in g.vertices if v not in dropped))


__all__ = [
    "Edge",
    "Graph",
    "complement",
    "components",
    "graph_from_edges",
    "induced_subgraph",
    "is_connected",
    "remove_vertices",
    "universal_vertices",
]
