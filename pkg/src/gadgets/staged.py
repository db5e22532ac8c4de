"""The staged gadget graph coded from an injective sequence.

Vertices are ``a, b, k, r`` followed by one pair ``x_i, y_i`` per stage. Index
``i`` is *true at stage s* when every later value below ``s`` is larger than
``f(i)``; ``y_t`` sees ``x_i`` exactly when ``i`` is still true at stage
``t + 1``. The vertices that are not true, together with ``a``, ``b`` and the
``y_i``, form a buried subgraph whose outside is ``{r}``.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from common.errors import InputError, InternalInconsistencyError
from common.logging import get_logger
from graph_core import Edge, Graph, StrictPartialOrder, graph_from_edges
from orderability import NonUniquenessWitness, validate_witness
from representation import ClosedRepresentation, representation_to_order, verify_representation

logger = get_logger(__name__)

A, B, K, R = 0, 1, 2, 3


def x(i: int) -> int:
    """Return the vertex index of ``x_i``."""
    return 4 + 2 * i


def y(i: int) -> int:
    """Return the vertex index of ``y_i``."""
    return 5 + 2 * i


def true_stages(f: Sequence[int], s: int) -> frozenset[int]:
    """Return the indices ``i < s`` with ``f(k) > f(i)`` for every ``i < k < s``.

    Raises:
        InputError: ``f`` repeats a value or is shorter than ``s``.
    """
    if len(set(f)) != len(f):
        raise InputError(f"f must be injective, got {list(f)}")
    if not 0 <= s <= len(f):
        raise InputError(f"stage {s} needs a prefix of length {s}, got {len(f)}")
    return frozenset(i for i in range(s) if all(f[k] > f[i] for k in range(i + 1, s)))


@dataclass(frozen=True)
class GadgetSpec:
    """An injective prefix ``f`` and the number of stages ``s`` to build."""

    f: tuple[int, ...]
    s: int

    def __post_init__(self):
        """Check injectivity and length."""
        if self.s < 0:
            raise InputError(f"stage count must be non-negative, got {self.s}")
        true_stages(self.f, self.s)


@dataclass(frozen=True)
class GadgetOutput:
    """The gadget graph, a representation of it, and the predicted buried subgraph."""

    spec: GadgetSpec
    graph: Graph
    representation: ClosedRepresentation
    predicted_B: frozenset[int]
    predicted_K: frozenset[int]
    predicted_R: frozenset[int] = field(default=frozenset({R}))


def _labels(s: int) -> dict[int, str]:
    labels = {A: "a", B: "b", K: "k", R: "r"}
    for i in range(s):
        labels[x(i)] = f"x{i}"
        labels[y(i)] = f"y{i}"
    return labels


def _edges(f: Sequence[int], s: int) -> list[Edge]:
    edges: list[Edge] = [(K, A), (K, B), (K, R)]
    for t in range(s):
        edges += [(A, x(t)), (x(t), B), (B, y(t)), (x(t), K), (y(t), K)]
        edges += [(x(t), x(i)) for i in range(t)]
        edges += [(y(t), y(i)) for i in range(t)]
        edges += [(x(t), y(i)) for i in range(t + 1)]
        true_now = true_stages(f, t + 1)
        edges += [(y(t), x(i)) for i in range(t) if i in true_now]
    return edges


def _representation(f: Sequence[int], s: int) -> ClosedRepresentation:
    """Insert the endpoints stage by stage.

    Every ``x_t`` starts at 3 and every ``y_t`` ends at 6; the free endpoints go
    strictly between the right ends of the ``x_j`` already false and the right
    ends of those still true, and above every earlier ``y`` left end.
    """
    left = {R: Fraction(0), K: Fraction(1), A: Fraction(3), B: Fraction(5)}
    right = {R: Fraction(2), K: Fraction(7), A: Fraction(4), B: Fraction(6)}
    for t in range(s):
        true_now = true_stages(f, t + 1)
        lo = max(
            [Fraction(5)]
            + [left[y(i)] for i in range(t)]
            + [right[x(j)] for j in range(t) if j not in true_now]
        )
        hi = min([Fraction(6)] + [right[x(i)] for i in range(t) if i in true_now])
        if not lo < hi:
            raise InternalInconsistencyError(f"no room for stage {t}: [{lo}, {hi}]")
        left[x(t)], right[x(t)] = Fraction(3), (lo + hi) / 2
        left[y(t)], right[y(t)] = (3 * lo + hi) / 4, Fraction(6)
    n = 4 + 2 * s
    return ClosedRepresentation(
        n=n, left=tuple(left[v] for v in range(n)), right=tuple(right[v] for v in range(n))
    )


def aca_gadget(spec: GadgetSpec) -> GadgetOutput:
    """Build the gadget graph of ``spec`` with its representation and predicted sets.

    Raises:
        InternalInconsistencyError: The staged representation does not match the graph.
    """
    f, s = spec.f, spec.s
    graph = graph_from_edges(4 + 2 * s, _edges(f, s), _labels(s))
    representation = _representation(f, s)
    if not verify_representation(graph, representation):
        raise InternalInconsistencyError("staged representation does not induce the gadget")

    true_now = true_stages(f, s)
    predicted_B = frozenset(
        {A, B}
        | {y(i) for i in range(s)}
        | {x(j) for j in range(s) if j not in true_now}
    )
    predicted_K = frozenset({K} | {x(i) for i in true_now})
    logger.debug(f"gadget for f={list(f)}, s={s}: true indices {sorted(true_now)}")
    return GadgetOutput(
        spec=spec,
        graph=graph,
        representation=representation,
        predicted_B=predicted_B,
        predicted_K=predicted_K,
    )


def gadget_witness_orders(out: GadgetOutput) -> NonUniquenessWitness:
    """Return the order of the staged representation and the one moving ``r`` to the top.

    In the second order ``r`` lies above every vertex except ``k``.

    Raises:
        InternalInconsistencyError: The two orders are not a valid witness.
    """
    order1 = representation_to_order(out.representation)
    rel = {(u, v) for u, v in order1.rel if R not in (u, v)}
    rel |= {(v, R) for v in out.graph.vertices if v not in (K, R)}
    order2 = StrictPartialOrder(n=out.graph.n, rel=frozenset(rel))
    witness = NonUniquenessWitness(order1=order1, order2=order2, triple=(A, B, R))
    if not validate_witness(out.graph, witness):
        raise InternalInconsistencyError("gadget orders do not witness non-uniqueness")
    return witness


__all__ = [
    "A",
    "B",
    "GadgetOutput",
    "GadgetSpec",
    "K",
    "R",
    "aca_gadget",
    "gadget_witness_orders",
    "true_stages",
    "x",
    "y",
]
