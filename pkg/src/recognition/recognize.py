"""Interval graph recognition with certificates both ways."""

from fractions import Fraction

from common.errors import InternalInconsistencyError
from common.logging import get_logger
from graph_core import Graph
from recognition.asteroidal import find_asteroidal_triple
from recognition.cliques import consecutive_clique_ordering
from recognition.obstruction import Obstruction, validate_obstruction
from recognition.triangulated import check_triangulated
from representation import ClosedRepresentation, verify_representation

logger = get_logger(__name__)


def obstruction_of(g: Graph) -> Obstruction | None:
    """Return a chordless cycle, else an asteroidal triple, else ``None``."""
    return check_triangulated(g) or find_asteroidal_triple(g)


def recognize(g: Graph) -> ClosedRepresentation | Obstruction:
    """Decide whether ``g`` is an interval graph.

    The obstruction search runs first and its answer is re-validated. Without
    an obstruction the graph is triangulated and free of asteroidal triples, so
    a consecutive ordering of its maximal cliques exists; vertex ``v`` then
    spans the positions of the first and last clique containing it.

    Raises:
        InternalInconsistencyError: The clique ordering and the obstruction
            search disagree, or a certificate fails its own check.
    """
    obstruction = obstruction_of(g)
    if obstruction is not None:
        if not validate_obstruction(g, obstruction):
            raise InternalInconsistencyError(f"obstruction does not re-validate: {obstruction}")
        return obstruction

    ordering = consecutive_clique_ordering(g)
    if ordering is None:
        logger.error("no obstruction was found but the cliques have no consecutive ordering")
        raise InternalInconsistencyError(
            "graph is triangulated without asteroidal triples yet its cliques have no consecutive ordering"
        )
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for position, clique in enumerate(ordering):
        for v in clique:
            first.setdefault(v, position)
            last[v] = position
    r = ClosedRepresentation(
        n=g.n,
        left=tuple(Fraction(first[v]) for v in g.vertices),
        right=tuple(Fraction(last[v]) for v in g.vertices),
    )
    if not verify_representation(g, r):
        raise InternalInconsistencyError("clique ordering produced a wrong representation")
    return r


def is_interval_graph(g: Graph) -> bool:
    """Return whether ``g`` has an interval representation."""
    return isinstance(recognize(g), ClosedRepresentation)


__all__ = ["is_interval_graph", "obstruction_of", "recognize"]
