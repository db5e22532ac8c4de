"""Asteroidal triple search."""

from itertools import combinations

import networkx as nx

from common.logging import get_logger
from graph_core import Graph
from recognition.obstruction import Obstruction

logger = get_logger(__name__)


def _avoiding_component_ids(g: Graph, third: int) -> dict[int, int]:
    """Label the components of ``g`` minus the closed neighborhood of ``third``."""
    graph = g.to_networkx()
    graph.remove_nodes_from(g.closed_neighborhood(third))
    labels: dict[int, int] = {}
    for i, part in enumerate(nx.connected_components(graph)):
        for v in part:
            labels[v] = i
    return labels


def least_shortest_path(graph: nx.Graph, source: int, target: int) -> tuple[int, ...]:
    """Return the lexicographically least among the shortest ``source``-``target`` paths.

    Distances to ``target`` are computed once; the walk from ``source`` then
    always steps to the smallest neighbor one step closer.
    """
    distance = nx.single_source_shortest_path_length(graph, target)
    path = [source]
    while path[-1] != target:
        here = path[-1]
        path.append(
            min(w for w in graph.neighbors(here) if distance.get(w) == distance[here] - 1)
        )
    return tuple(path)


def _witness_path(g: Graph, source: int, target: int, third: int) -> tuple[int, ...]:
    graph = g.to_networkx()
    graph.remove_nodes_from(g.closed_neighborhood(third))
    return least_shortest_path(graph, source, target)


def find_asteroidal_triple(g: Graph) -> Obstruction | None:
    """Return the lexicographically least asteroidal triple of ``g`` with shortest witness paths."""
    avoiding = {v: _avoiding_component_ids(g, v) for v in g.vertices}

    def _joined(a: int, b: int, third: int) -> bool:
        labels = avoiding[third]
        return a in labels and b in labels and labels[a] == labels[b]

    for x, y, z in combinations(g.vertices, 3):
        if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
            continue
        if _joined(x, y, z) and _joined(x, z, y) and _joined(y, z, x):
            logger.debug(f"asteroidal triple {(x, y, z)}")
            return Obstruction(
                kind="asteroidal_triple",
                triple=(x, y, z),
                witness_paths=(
                    _witness_path(g, x, y, z),
                    _witness_path(g, x, z, y),
                    _witness_path(g, y, z, x),
                ),
            )
    return None


__all__ = ["find_asteroidal_triple", "least_shortest_path"]
