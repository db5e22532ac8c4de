"""One associated order, found by orienting the complement one implication class at a time."""

from collections import deque

from common.errors import InputError, InternalInconsistencyError
from common.logging import get_logger
from graph_core import Graph, StrictPartialOrder

logger = get_logger(__name__)

Arc = tuple[int, int]


def _implication_class(g: Graph, arcs: set[Arc], start: Arc) -> set[Arc]:
    """Collect the arcs forced by ``start`` among the complement arcs left in ``arcs``.

    ``(a, b)`` forces ``(a, c)`` when no remaining arc joins ``b`` and ``c``,
    and ``(c, b)`` when none joins ``a`` and ``c``.
    """
    found = {start}
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        for c in g.vertices:
            for arc, other in (((a, c), (b, c)), ((c, b), (a, c))):
                if arc in arcs and other not in arcs and arc not in found:
                    found.add(arc)
                    queue.append(arc)
    return found


def associated_order(g: Graph) -> StrictPartialOrder | None:
    """Return a strict partial order whose incomparability graph is ``g``.

    The complement is decomposed class by class: the least remaining arc is
    kept forward together with its implication class in what is left of the
    complement, then both orientations of that class are removed. The union of
    the kept classes is transitive whenever no class meets its own reversal;
    when one does, the complement has no transitive orientation and ``None``
    is returned.

    Raises:
        InternalInconsistencyError: The kept classes do not form an order.
    """
    arcs = {(u, v) for u, v in g.non_edges()} | {(v, u) for u, v in g.non_edges()}
    kept: set[Arc] = set()
    classes = 0
    while arcs:
        forced = _implication_class(g, arcs, min(arcs))
        clash = next(((a, b) for a, b in sorted(forced) if (b, a) in forced), None)
        if clash is not None:
            logger.debug(f"implication class of {min(forced)} contains both {clash} and its reversal")
            return None
        kept |= forced
        arcs -= forced | {(b, a) for a, b in forced}
        classes += 1
    logger.debug(f"complement oriented in {classes} implication classes")
    try:
        return StrictPartialOrder(n=g.n, rel=frozenset(kept))
    except InputError as e:
        logger.error(f"implication classes do not compose: {e}")
        raise InternalInconsistencyError(f"orientation of the complement is not an order: {e}") from e


__all__ = ["associated_order"]
