"""Maximal cliques and their consecutive orderings."""

import networkx as nx

from common.errors import InternalInconsistencyError, NotIntervalOrderError
from common.logging import get_logger
from graph_core import Graph
from recognition.orientation import associated_order
from representation import order_to_representation

logger = get_logger(__name__)

Clique = frozenset[int]


def maximal_cliques(g: Graph) -> list[Clique]:
    """Return the maximal cliques of ``g`` sorted by their sorted vertex tuples."""
    cliques = [frozenset(c) for c in nx.find_cliques(g.to_networkx())]
    return sorted(cliques, key=lambda c: tuple(sorted(c)))


def consecutive_clique_ordering(g: Graph) -> list[Clique] | None:
    """Return an ordering of the maximal cliques in which every vertex's cliques are consecutive.

    An associated order of a triangulated graph has no 2+2, so its down-set
    representation exists. The members of each maximal clique then share a
    segment of their own, disjoint from the segments of the other cliques, and
    the cliques are sorted by where that segment starts. ``None`` when ``g`` is
    not triangulated or its complement has no transitive orientation.

    Raises:
        InternalInconsistencyError: A triangulated graph yields an order with a 2+2.
    """
    if not nx.is_chordal(g.to_networkx()):
        return None
    order = associated_order(g)
    if order is None:
        return None
    try:
        r = order_to_representation(order)
    except NotIntervalOrderError as e:
        logger.error(f"triangulated graph with a 2+2 in its associated order: {e.witness}")
        raise InternalInconsistencyError("associated order of a triangulated graph has a 2+2") from e
    cliques = maximal_cliques(g)
    ordering = sorted(cliques, key=lambda c: max(r.left[v] for v in c))
    logger.debug(f"{len(cliques)} maximal cliques ordered")
    return ordering


__all__ = ["Clique", "consecutive_clique_ordering", "maximal_cliques"]
