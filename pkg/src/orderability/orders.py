"""Orders read off the certificates of the unique-orderability criteria."""

from collections.abc import Iterable
from dataclasses import dataclass

from common.errors import InputError, InternalInconsistencyError
from common.logging import get_logger
from graph_core import Graph, Pair, StrictPartialOrder, is_associated
from orderability.buried import BuriedCertificate
from orderability.wq import WQGraph

logger = get_logger(__name__)

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class NonUniquenessWitness:
    """Two orders associated to the same graph that are neither equal nor dual.

    On ``triple`` the second order disagrees with the first and with its dual.
    """

    order1: StrictPartialOrder
    order2: StrictPartialOrder
    triple: Triple


def triple_disagrees(
    order1: StrictPartialOrder, order2: StrictPartialOrder, triple: Triple
) -> bool:
    """Return whether ``order2`` restricted to ``triple`` is neither ``order1`` nor its dual there."""
    restricted = order2.restricted(triple)
    return restricted != order1.restricted(triple) and restricted != order1.dual().restricted(
        triple
    )


def validate_witness(g: Graph, witness: NonUniquenessWitness) -> bool:
    """Re-check a non-uniqueness witness against ``g``."""
    o1, o2, triple = witness.order1, witness.order2, witness.triple
    if o1.n != g.n or o2.n != g.n:
        return False
    if not (is_associated(g, o1) and is_associated(g, o2)):
        return False
    if o2 in (o1, o1.dual()):
        return False
    if len(set(triple)) != 3 or any(not 0 <= v < g.n for v in triple):
        return False
    return triple_disagrees(o1, o2, triple)


def _order(n: int, rel: Iterable[Pair], what: str) -> StrictPartialOrder:
    try:
        return StrictPartialOrder(n=n, rel=frozenset(rel))
    except InputError as e:
        raise InternalInconsistencyError(f"{what} is not a strict partial order: {e}") from e


def two_orders_from_buried(
    g: Graph, cert: BuriedCertificate, base: StrictPartialOrder
) -> NonUniquenessWitness:
    """Build two associated orders that disagree on ``cert.B``.

    The first makes ``B`` convex by placing every member where its least
    member ``b0`` sits relative to each outside vertex; the second reverses the
    first inside ``B`` only.

    Raises:
        InputError: ``base`` is not associated to ``g``.
        InternalInconsistencyError: A constructed order fails its checks.
    """
    if not is_associated(g, base):
        raise InputError("base order is not associated to the graph")
    B = cert.B
    b0 = min(B)
    kept = {(p, q) for p, q in base.rel if (p in B) == (q in B)}
    anchored = set()
    for v in g.vertices:
        if v in B:
            continue
        for b in B:
            if base.precedes(b0, v):
                anchored.add((b, v))
            elif base.precedes(v, b0):
                anchored.add((v, b))
    order1 = _order(g.n, kept | anchored, "convexified order")
    order2 = _order(
        g.n,
        {(q, p) if p in B and q in B else (p, q) for p, q in order1.rel},
        "order reversed inside B",
    )

    inside = [(x, y) for x, y in order1.sorted_pairs() if x in B and y in B]
    if not inside:
        raise InternalInconsistencyError(f"no comparable pair inside B = {sorted(B)}")
    x, y = inside[0]
    witness = NonUniquenessWitness(
        order1=order1, order2=order2, triple=(x, y, cert.witness_outside)
    )
    if not validate_witness(g, witness):
        logger.error(f"orders built from B = {sorted(B)} do not form a witness")
        raise InternalInconsistencyError("buried subgraph did not yield two distinct orders")
    return witness


def unique_order_from_wq(g: Graph, wq: WQGraph) -> StrictPartialOrder:
    """Orient every pair of the component holding the least pair of ``W``.

    Raises:
        InputError: ``wq`` belongs to another graph or has other than two components.
        InternalInconsistencyError: The oriented pairs are not an associated order.
    """
    if wq.base != g:
        raise InputError("pair graph was built from a different graph")
    if wq.component_count != 2:
        raise InputError(f"(W, Q) has {wq.component_count} components, not 2")
    order = _order(g.n, wq.members(0), "component of (W, Q)")
    if not is_associated(g, order):
        raise InternalInconsistencyError("component of (W, Q) is not associated to the graph")
    return order


__all__ = [
    "NonUniquenessWitness",
    "Triple",
    "triple_disagrees",
    "two_orders_from_buried",
    "unique_order_from_wq",
    "validate_witness",
]
