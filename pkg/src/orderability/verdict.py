"""Deciding unique orderability by cross-checking the buried-subgraph and ``(W, Q)`` criteria."""

from dataclasses import dataclass

from common.errors import InternalInconsistencyError, NotIntervalGraphError
from common.logging import get_logger
from graph_core import Graph, StrictPartialOrder, components, is_associated
from orderability.buried import BuriedCertificate, find_buried, is_buried
from orderability.orders import (
    NonUniquenessWitness,
    two_orders_from_buried,
    unique_order_from_wq,
    validate_witness,
)
from orderability.wq import build_wq
from recognition import recognize
from representation import ClosedRepresentation, representation_to_order

logger = get_logger(__name__)


@dataclass(frozen=True)
class UniquenessVerdict:
    """Whether a graph has one associated order up to duality, with its certificate.

    ``order`` is present exactly when ``unique`` holds, ``witness`` exactly when
    it does not.
    """

    unique: bool
    wq_components: int
    order: StrictPartialOrder | None = None
    witness: NonUniquenessWitness | None = None
    buried: BuriedCertificate | None = None


def _base_order(g: Graph) -> StrictPartialOrder:
    found = recognize(g)
    if not isinstance(found, ClosedRepresentation):
        raise NotIntervalGraphError("graph is not an interval graph", obstruction=found)
    return representation_to_order(found)


def _stacked(n: int, blocks: list[frozenset[int]]) -> StrictPartialOrder:
    """Return the order putting every block wholly below the next, each block an antichain."""
    return StrictPartialOrder.from_pairs(
        n,
        (
            (u, v)
            for i, lower in enumerate(blocks)
            for upper in blocks[i + 1 :]
            for u in lower
            for v in upper
        ),
    )


def _disconnected_witness(
    g: Graph, blocks: list[frozenset[int]], base: StrictPartialOrder
) -> NonUniquenessWitness:
    """Modify the representation order of a disconnected graph without changing its graph.

    The representation lays components out left to right by least vertex. With
    three or more components the first two swap places; with two, the first
    component that is not complete is reversed internally.
    """
    if len(blocks) >= 3:
        first, second = blocks[0], blocks[1]
        rel = {
            (q, p) if (p in first and q in second) else (p, q) for p, q in base.rel
        }
        triple = (min(first), min(second), min(blocks[2]))
    else:
        inner = next(b for b in blocks if not _is_clique(g, b))
        other = next(b for b in blocks if b is not inner)
        rel = {(q, p) if (p in inner and q in inner) else (p, q) for p, q in base.rel}
        x, y = min((p, q) for p, q in base.rel if p in inner and q in inner)
        triple = (x, y, min(other))
    return NonUniquenessWitness(
        order1=base, order2=StrictPartialOrder(n=g.n, rel=frozenset(rel)), triple=triple
    )


def _is_clique(g: Graph, vertices: frozenset[int]) -> bool:
    return all(g.adjacent(u, v) for u in vertices for v in vertices)


def decide_unique(g: Graph) -> UniquenessVerdict:
    """Decide whether ``g`` has a unique associated order up to duality.

    Complete graphs are unique with the antichain. Disconnected graphs are
    unique exactly when they have two components, both complete. Otherwise the
    buried-subgraph search and the component count of ``(W, Q)`` must agree.

    Raises:
        NotIntervalGraphError: ``g`` is not an interval graph.
        InternalInconsistencyError: The criteria disagree or a certificate fails.
    """
    base = _base_order(g)
    wq = build_wq(g)

    if g.is_complete():
        verdict = UniquenessVerdict(
            unique=True, wq_components=0, order=StrictPartialOrder.antichain(g.n)
        )
        return _checked(g, verdict)

    blocks = components(g)
    if len(blocks) > 1:
        logger.debug(f"disconnected: {len(blocks)} components")
        if len(blocks) == 2 and all(_is_clique(g, b) for b in blocks):
            verdict = UniquenessVerdict(
                unique=True, wq_components=wq.component_count, order=_stacked(g.n, blocks)
            )
        else:
            verdict = UniquenessVerdict(
                unique=False,
                wq_components=wq.component_count,
                witness=_disconnected_witness(g, blocks, base),
            )
        return _checked(g, verdict)

    cert = find_buried(g)
    count = wq.component_count
    logger.debug(f"buried: {cert is not None}, (W, Q) components: {count}")
    if (cert is not None) != (count > 2):
        logger.error(f"buried subgraph {cert} but (W, Q) has {count} components")
        raise InternalInconsistencyError(
            f"criteria disagree: buried subgraph {'found' if cert else 'absent'}, "
            f"{count} components of (W, Q)"
        )
    if cert is None:
        verdict = UniquenessVerdict(
            unique=True, wq_components=count, order=unique_order_from_wq(g, wq)
        )
    else:
        verdict = UniquenessVerdict(
            unique=False,
            wq_components=count,
            witness=two_orders_from_buried(g, cert, base),
            buried=cert,
        )
    return _checked(g, verdict)


def _checked(g: Graph, verdict: UniquenessVerdict) -> UniquenessVerdict:
    if not validate_verdict(g, verdict):
        logger.error(f"verdict fails its own check: {verdict}")
        raise InternalInconsistencyError("verdict certificate does not re-validate")
    return verdict


def validate_verdict(g: Graph, verdict: UniquenessVerdict) -> bool:
    """Re-check whichever certificates ``verdict`` carries against ``g``."""
    if verdict.unique:
        if verdict.order is None or verdict.witness is not None or verdict.buried is not None:
            return False
        return is_associated(g, verdict.order)
    if verdict.witness is None or verdict.order is not None:
        return False
    if not validate_witness(g, verdict.witness):
        return False
    if verdict.buried is not None:
        check = is_buried(g, verdict.buried.B)
        return bool(check) and check.K == verdict.buried.K and check.R == verdict.buried.R
    return True


__all__ = ["UniquenessVerdict", "decide_unique", "validate_verdict"]
