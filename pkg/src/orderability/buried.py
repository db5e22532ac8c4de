"""Buried subgraphs and the leveled construction ``B(v, u)``.

``B`` is buried when it contains two non-adjacent vertices, no vertex of ``B``
is adjacent to all of ``B``, and the vertices ``R(B)`` that are neither in
``B`` nor adjacent to all of it exist and see nothing of ``B``.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from common.configuration import DEFAULT_MAX_N
from common.errors import InputError, InternalInconsistencyError, OracleBoundError
from common.logging import get_logger
from graph_core import Graph, Pair, is_connected
from recognition import is_interval_graph

logger = get_logger(__name__)


@dataclass(frozen=True)
class LeveledSet:
    """``B(v, u)`` with the stage at which each member entered."""

    v: int
    u: int
    members: frozenset[int]
    level: Mapping[int, int] = field(hash=False)

    @property
    def depth(self) -> int:
        """Return the last stage that added a member."""
        return max(self.level.values())

    def stage(self, n: int) -> frozenset[int]:
        """Return ``B_n(v, u)``, the members of level at most ``n``."""
        return frozenset(w for w, lv in self.level.items() if lv <= n)


@dataclass(frozen=True)
class BuriedCertificate:
    """A buried subgraph with ``K(B)``, ``R(B)`` and one witness for each condition."""

    B: frozenset[int]
    K: frozenset[int]
    R: frozenset[int]
    witness_nonedge: Pair
    witness_outside: int


@dataclass(frozen=True)
class BuriedCheck:
    """The outcome of checking one vertex set; truthy iff the set is buried."""

    B: frozenset[int]
    K: frozenset[int]
    R: frozenset[int]
    holds: bool
    witness_nonedge: Pair | None = None
    witness_outside: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def certificate(self) -> BuriedCertificate | None:
        """Return the certificate when the set is buried."""
        if not self.holds:
            return None
        assert self.witness_nonedge is not None and self.witness_outside is not None
        return BuriedCertificate(
            B=self.B,
            K=self.K,
            R=self.R,
            witness_nonedge=self.witness_nonedge,
            witness_outside=self.witness_outside,
        )


def construct_b(g: Graph, v: int, u: int) -> LeveledSet:
    """Compute ``B(v, u)`` as the least fixpoint of the stage operator.

    ``B_0 = {v, u}``; a vertex ``w`` enters ``B_{n+1}`` when it is adjacent to
    some member of ``B_n`` and non-adjacent to another (adjacency is reflexive).

    Raises:
        InputError: ``v`` and ``u`` coincide or are adjacent.
    """
    for w in (v, u):
        if not 0 <= w < g.n:
            raise InputError(f"vertex {w} out of range for n={g.n}")
    if v == u or g.adjacent(v, u):
        raise InputError(f"B(v, u) needs two distinct non-adjacent vertices, got {(v, u)}")

    level = {v: 0, u: 0}
    current = {v, u}
    stage = 0
    while True:
        stage += 1
        entering = {
            w
            for w in g.vertices
            if w not in current
            and any(g.adjacent(w, z) for z in current)
            and any(not g.adjacent(w, z) for z in current)
        }
        if not entering:
            break
        for w in entering:
            level[w] = stage
        current |= entering

    result = LeveledSet(v=v, u=u, members=frozenset(current), level=level)
    logger.debug(f"B({v}, {u}) has {len(current)} members after {result.depth} stages")
    return result


def core_of(g: Graph, B: Iterable[int]) -> frozenset[int]:
    """Return ``K(B)``, the vertices adjacent (reflexively) to every member of ``B``."""
    members = frozenset(B)
    return frozenset(w for w in g.vertices if all(g.adjacent(w, b) for b in members))


def is_buried(g: Graph, B: Iterable[int]) -> BuriedCheck:
    """Check the three conditions of a buried subgraph on ``B``.

    Raises:
        InputError: ``B`` mentions a vertex outside ``g``.
    """
    members = frozenset(B)
    if any(not 0 <= w < g.n for w in members):
        raise InputError(f"vertex set {sorted(members)} is not contained in 0..{g.n - 1}")
    K = core_of(g, members)
    R = frozenset(g.vertices) - members - K
    check = dict(B=members, K=K, R=R)

    nonedges = [
        (a, b) for a, b in combinations(sorted(members), 2) if not g.adjacent(a, b)
    ]
    if not nonedges:
        return BuriedCheck(**check, holds=False, reason="no two members are non-adjacent")
    if K & members:
        return BuriedCheck(**check, holds=False, reason="a member is adjacent to all of B")
    if not R:
        return BuriedCheck(**check, holds=False, reason="R(B) is empty")
    touching = [(b, r) for b in sorted(members) for r in sorted(R) if g.adjacent(b, r)]
    if touching:
        return BuriedCheck(**check, holds=False, reason=f"edge {touching[0]} joins B and R(B)")
    return BuriedCheck(
        **check, holds=True, witness_nonedge=nonedges[0], witness_outside=min(R)
    )


def _require_connected_interval(g: Graph) -> None:
    if not is_connected(g):
        raise InputError("buried-subgraph search needs a connected graph")
    if not is_interval_graph(g):
        raise InputError("buried-subgraph search needs an interval graph")


def find_buried(g: Graph) -> BuriedCertificate | None:
    """Return the buried ``B(v, u)`` of the lexicographically least pair, or ``None``.

    When every ``B(v, u)`` has an empty ``R``, the graph has no buried subgraph
    at all.

    Raises:
        InputError: ``g`` is disconnected or not an interval graph.
        InternalInconsistencyError: Some ``B(v, u)`` has a non-empty ``R`` yet is
            not buried.
    """
    _require_connected_interval(g)
    for v, u in g.non_edges():
        leveled = construct_b(g, v, u)
        check = is_buried(g, leveled.members)
        if check:
            logger.debug(f"B({v}, {u}) = {sorted(leveled.members)} is buried")
            return check.certificate()
        if check.R:
            logger.error(f"B({v}, {u}) has a non-empty R yet fails the buried check: {check.reason}")
            raise InternalInconsistencyError(
                f"B({v}, {u}) = {sorted(leveled.members)} has R = {sorted(check.R)} but is not buried"
            )
    return None


def buried_subsets(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> list[frozenset[int]]:
    """Return every buried vertex set of ``g``, ordered by size then members.

    Raises:
        OracleBoundError: ``g`` has more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise OracleBoundError(f"exhaustive subset search refused for n={g.n} > {max_n}")
    found = [
        frozenset(subset)
        for size in range(2, g.n)
        for subset in combinations(g.vertices, size)
        if is_buried(g, subset)
    ]
    logger.debug(f"{len(found)} buried subsets among {2**g.n} candidates")
    return found


def is_minimal_buried(g: Graph, B: Iterable[int], pair: Pair) -> bool:
    """Return whether ``B`` is buried and no proper subset of it containing ``pair`` is."""
    members = frozenset(B)
    if not set(pair) <= members or not is_buried(g, members):
        return False
    rest = sorted(members - set(pair))
    for size in range(len(rest)):
        for extra in combinations(rest, size):
            if is_buried(g, set(pair) | set(extra)):
                return False
    return True


__all__ = [
    "BuriedCertificate",
    "BuriedCheck",
    "LeveledSet",
    "buried_subsets",
    "construct_b",
    "core_of",
    "find_buried",
    "is_buried",
    "is_minimal_buried",
]
