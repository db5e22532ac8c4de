"""Brute-force enumeration of the orders associated to a graph.

An order is associated to ``g`` when ``g`` is its incomparability graph, so
the orders are exactly the transitive orientations of the complement. The
search orients one complement edge at a time and keeps the partial relation
transitively closed, pruning as soon as closure would relate two adjacent
vertices or contradict an earlier choice.
"""

from dataclasses import dataclass

from common.configuration import DEFAULT_MAX_N
from common.errors import InternalInconsistencyError, OracleBoundError
from common.logging import get_logger
from graph_core import Graph, StrictPartialOrder
from recognition import is_interval_graph

logger = get_logger(__name__)


@dataclass(frozen=True)
class OrientationSet:
    """The associated orders of a graph, sorted by their relation pairs.

    ``truncated`` is set when the enumeration stopped at its limit with more
    orders left; ``dual_classes`` then counts the classes among the listed
    orders only.
    """

    orders: tuple[StrictPartialOrder, ...]
    dual_classes: int
    truncated: bool = False


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, g: Graph, limit: int | None):
        self.g = g
        self.limit = limit
        self.closed = [sum(1 << w for w in g.closed_neighborhood(v)) for v in g.vertices]
        self.pairs = g.non_edges()
        self.found: list[tuple[int, ...]] = []
        self.branches = 0

    def done(self) -> bool:
        return self.limit is not None and len(self.found) >= self.limit

    def orient(self, pred: list[int], succ: list[int], a: int, b: int) -> bool:
        """Add ``a < b`` and its transitive consequences in place; ``False`` on conflict."""
        lows = pred[a] | (1 << a)
        highs = succ[b] | (1 << b)
        for x in _bits(lows):
            new = highs & ~succ[x]
            if new & (self.closed[x] | pred[x]):
                return False
            succ[x] |= new
            for y in _bits(new):
                pred[y] |= 1 << x
        return True

    def run(self, pred: list[int], succ: list[int], start: int) -> None:
        if self.done():
            return
        i = start
        while i < len(self.pairs):
            u, v = self.pairs[i]
            if not (succ[u] >> v & 1 or succ[v] >> u & 1):
                break
            i += 1
        else:
            self.found.append(tuple(succ))
            return
        u, v = self.pairs[i]
        for a, b in ((u, v), (v, u)):
            self.branches += 1
            p, s = pred.copy(), succ.copy()
            if self.orient(p, s, a, b):
                self.run(p, s, i + 1)


def _to_order(n: int, succ: tuple[int, ...]) -> StrictPartialOrder:
    return StrictPartialOrder(
        n=n, rel=frozenset((u, v) for u in range(n) for v in _bits(succ[u]))
    )


def dual_class_count(orders: tuple[StrictPartialOrder, ...]) -> int:
    """Return the number of classes of ``orders`` under ``o ~ dual(o)``."""
    keys = {min(tuple(o.sorted_pairs()), tuple(o.dual().sorted_pairs())) for o in orders}
    return len(keys)


def enumerate_associated_orders(
    g: Graph, *, max_n: int = DEFAULT_MAX_N, limit: int | None = None
) -> OrientationSet:
    """List every order associated to ``g``, or the first ``limit`` found.

    Raises:
        OracleBoundError: ``g`` has more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise OracleBoundError(f"oracle enumeration refused for n={g.n} > {max_n}")
    # look one order past the limit to know whether the listing is complete
    search = _Search(g, None if limit is None else limit + 1)
    search.run([0] * g.n, [0] * g.n, 0)
    truncated = limit is not None and len(search.found) > limit
    found = search.found[:limit] if limit is not None else search.found
    orders = tuple(sorted((_to_order(g.n, s) for s in found), key=lambda o: o.sorted_pairs()))
    logger.debug(
        f"{len(orders)} associated orders{' (truncated)' if truncated else ''}, "
        f"{search.branches} branches"
    )
    return OrientationSet(
        orders=orders, dual_classes=dual_class_count(orders), truncated=truncated
    )


def oracle_unique(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> bool:
    """Return whether the associated orders of ``g`` form a single duality class.

    Three orders always span two classes, so the search stops at three.

    Raises:
        OracleBoundError: ``g`` has more than ``max_n`` vertices.
        InternalInconsistencyError: ``g`` is an interval graph without associated orders.
    """
    found = enumerate_associated_orders(g, max_n=max_n, limit=3)
    if not found.orders:
        if is_interval_graph(g):
            raise InternalInconsistencyError("interval graph has no associated order")
        return False
    return len(found.orders) <= 2 and found.dual_classes == 1


__all__ = [
    "OrientationSet",
    "dual_class_count",
    "enumerate_associated_orders",
    "oracle_unique",
]
