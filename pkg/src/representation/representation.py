"""Closed interval representations with exact rational endpoints."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from common.errors import InputError, InternalInconsistencyError
from common.logging import get_logger
from graph_core import Graph, StrictPartialOrder, graph_from_edges

logger = get_logger(__name__)

Endpoint = Fraction | int


@dataclass(frozen=True)
class ClosedRepresentation:
    """Vertex ``v`` is the closed interval ``[left[v], right[v]]`` of the rationals."""

    n: int
    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]

    def __post_init__(self):
        """Check that there is one nondecreasing interval per vertex."""
        if len(self.left) != self.n or len(self.right) != self.n:
            raise InputError(
                f"expected {self.n} intervals, got {len(self.left)} left and {len(self.right)} right endpoints"
            )
        for v, (lo, hi) in enumerate(zip(self.left, self.right)):
            if not isinstance(lo, Fraction) or not isinstance(hi, Fraction):
                raise InputError(f"endpoints of {v} must be exact rationals")
            if hi < lo:
                raise InputError(f"interval of {v} is empty: [{lo}, {hi}]")

    @classmethod
    def from_intervals(
        cls, intervals: Sequence[tuple[Endpoint, Endpoint]]
    ) -> "ClosedRepresentation":
        """Build a representation from ``(left, right)`` pairs of ints or fractions."""
        return cls(
            n=len(intervals),
            left=tuple(Fraction(lo) for lo, _ in intervals),
            right=tuple(Fraction(hi) for _, hi in intervals),
        )

    def interval(self, v: int) -> tuple[Fraction, Fraction]:
        """Return the endpoints of ``v``."""
        return self.left[v], self.right[v]

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        """Return every interval in vertex order."""
        return list(zip(self.left, self.right))

    def intersects(self, u: int, v: int) -> bool:
        """Return whether the closed intervals of ``u`` and ``v`` share a point."""
        return max(self.left[u], self.left[v]) <= min(self.right[u], self.right[v])

    def is_distinguishing(self) -> bool:
        """Return whether all endpoints are distinct and every interval is nondegenerate."""
        values = set(self.left) | set(self.right)
        return len(values) == 2 * self.n


def interval_precedes(r: ClosedRepresentation, u: int, v: int) -> bool:
    """Return whether the interval of ``u`` lies wholly before that of ``v``."""
    return r.right[u] < r.left[v]


def induced_graph(r: ClosedRepresentation) -> Graph:
    """Return the intersection graph of ``r``."""
    return graph_from_edges(
        r.n,
        (
            (u, v)
            for u in range(r.n)
            for v in range(u + 1, r.n)
            if r.intersects(u, v)
        ),
    )


def verify_representation(g: Graph, r: ClosedRepresentation) -> bool:
    """Return whether ``r`` represents ``g``.

    Raises:
        InputError: The vertex counts differ.
    """
    if g.n != r.n:
        raise InputError(f"graph has {g.n} vertices but representation has {r.n}")
    return induced_graph(r) == g


def representation_to_order(r: ClosedRepresentation) -> StrictPartialOrder:
    """Return the interval order of ``r``: ``u`` precedes ``v`` when its interval is wholly before."""
    rel = frozenset(
        (u, v)
        for u in range(r.n)
        for v in range(r.n)
        if interval_precedes(r, u, v)
    )
    try:
        return StrictPartialOrder(n=r.n, rel=rel)
    except InputError as e:
        raise InternalInconsistencyError(f"interval precedence is not an order: {e}") from e


def normalize_distinguishing(r: ClosedRepresentation) -> ClosedRepresentation:
    """Re-rank the endpoints to distinct integers ``0..2n-1``.

    Endpoints are sorted by value with left endpoints before right endpoints at
    equal values, then by vertex. Touching intervals therefore keep a common
    point and point intervals become nondegenerate.
    """
    events = sorted(
        [(lo, 0, v) for v, lo in enumerate(r.left)]
        + [(hi, 1, v) for v, hi in enumerate(r.right)]
    )
    left = [Fraction(0)] * r.n
    right = [Fraction(0)] * r.n
    for rank, (_, side, v) in enumerate(events):
        if side == 0:
            left[v] = Fraction(rank)
        else:
            right[v] = Fraction(rank)
    result = ClosedRepresentation(n=r.n, left=tuple(left), right=tuple(right))
    if induced_graph(result) != induced_graph(r):
        raise InternalInconsistencyError("normalization changed the intersection graph")
    return result


__all__ = [
    "ClosedRepresentation",
    "Endpoint",
    "induced_graph",
    "interval_precedes",
    "normalize_distinguishing",
    "representation_to_order",
    "verify_representation",
]
