"""Certificates that a graph is not an interval graph."""

from dataclasses import dataclass
from typing import Literal

from common.errors import InputError
from common.logging import get_logger
from graph_core import Graph, Path, validate_path

logger = get_logger(__name__)

ObstructionKind = Literal["chordless_cycle", "asteroidal_triple"]


@dataclass(frozen=True)
class Obstruction:
    """A chordless cycle of length at least four, or an asteroidal triple with its paths.

    For an asteroidal triple ``(x, y, z)`` the witness paths join, in order,
    ``x`` to ``y`` avoiding the closed neighborhood of ``z``, ``x`` to ``z``
    avoiding that of ``y``, and ``y`` to ``z`` avoiding that of ``x``.
    """

    kind: ObstructionKind
    cycle: tuple[int, ...] | None = None
    triple: tuple[int, int, int] | None = None
    witness_paths: tuple[tuple[int, ...], ...] | None = None


def _is_chordless_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.adjacent(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def _avoids(g: Graph, path: tuple[int, ...], start: int, end: int, third: int) -> bool:
    try:
        validate_path(g, Path.of(path))
    except InputError:
        return False
    forbidden = g.closed_neighborhood(third)
    return path[0] == start and path[-1] == end and not forbidden & set(path)


def _is_asteroidal_triple(
    g: Graph, triple: tuple[int, int, int], paths: tuple[tuple[int, ...], ...]
) -> bool:
    x, y, z = triple
    if len(set(triple)) != 3 or any(not 0 <= v < g.n for v in triple):
        return False
    if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
        return False
    if len(paths) != 3:
        return False
    return (
        _avoids(g, paths[0], x, y, z)
        and _avoids(g, paths[1], x, z, y)
        and _avoids(g, paths[2], y, z, x)
    )


def validate_obstruction(g: Graph, obstruction: Obstruction) -> bool:
    """Re-check ``obstruction`` against ``g`` using the definitions only."""
    if obstruction.kind == "chordless_cycle":
        return obstruction.cycle is not None and _is_chordless_cycle(g, obstruction.cycle)
    if obstruction.kind == "asteroidal_triple":
        return (
            obstruction.triple is not None
            and obstruction.witness_paths is not None
            and _is_asteroidal_triple(g, obstruction.triple, obstruction.witness_paths)
        )
    return False


__all__ = ["Obstruction", "ObstructionKind", "validate_obstruction"]
