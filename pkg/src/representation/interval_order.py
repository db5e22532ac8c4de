"""Interval orders: the 2+2 test and the down-set construction of a representation."""

from fractions import Fraction

from common.errors import InternalInconsistencyError, NotIntervalOrderError
from common.logging import get_logger
from graph_core import StrictPartialOrder
from representation.representation import (
    ClosedRepresentation,
    representation_to_order,
)

logger = get_logger(__name__)


def find_two_plus_two(o: StrictPartialOrder) -> tuple[int, int, int, int] | None:
    """Return the least ``(a, b, c, d)`` with ``a < b``, ``c < d`` and no relation across the chains.

    "Least" is lexicographic on the quadruple. ``None`` when ``o`` is an
    interval order.
    """
    pairs = o.sorted_pairs()
    for a, b in pairs:
        for c, d in pairs:
            if len({a, b, c, d}) < 4:
                continue
            if any(o.comparable(x, y) for x in (a, b) for y in (c, d)):
                continue
            return a, b, c, d
    return None


def is_interval_order(o: StrictPartialOrder) -> bool:
    """Return whether ``o`` contains no 2+2."""
    return find_two_plus_two(o) is None


def order_to_representation(o: StrictPartialOrder) -> ClosedRepresentation:
    """Realize an interval order by closed intervals.

    The down-sets of an interval order form a chain under inclusion. With
    ``D_0 < D_1 < ... < D_m`` the distinct down-sets, ``left(v)`` is the index of
    the down-set of ``v`` and ``right(v)`` the largest index whose down-set
    misses ``v``.

    Raises:
        NotIntervalOrderError: ``o`` contains a 2+2; the witness is attached.
    """
    witness = find_two_plus_two(o)
    if witness is not None:
        a, b, c, d = witness
        raise NotIntervalOrderError(
            f"order contains 2+2: {a} < {b} and {c} < {d} with no cross relation",
            witness,
        )

    down = [o.predecessors(v) for v in range(o.n)]
    chain = sorted(set(down), key=len)
    index = {d: i for i, d in enumerate(chain)}
    left = [index[down[v]] for v in range(o.n)]
    right = [max(i for i, d in enumerate(chain) if v not in d) for v in range(o.n)]

    r = ClosedRepresentation(
        n=o.n,
        left=tuple(Fraction(x) for x in left),
        right=tuple(Fraction(x) for x in right),
    )
    if representation_to_order(r) != o:
        raise InternalInconsistencyError("down-set representation does not reproduce the order")
    logger.debug(f"represented interval order on {o.n} vertices with {len(chain)} down-sets")
    return r


__all__ = ["find_two_plus_two", "is_interval_order", "order_to_representation"]
