"""Paths and minimal paths."""

from collections.abc import Sequence
from dataclasses import dataclass

from common.errors import InputError
from graph_core.graph import Graph


@dataclass(frozen=True)
class Path:
    """A vertex sequence whose consecutive members are distinct and adjacent."""

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, vertices: Sequence[int]) -> "Path":
        """Build a path from any sequence."""
        return cls(vertices=tuple(vertices))

    @property
    def length(self) -> int:
        """Return the number of edges."""
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        """Return the first vertex."""
        return self.vertices[0]

    @property
    def end(self) -> int:
        """Return the last vertex."""
        return self.vertices[-1]


def validate_path(g: Graph, p: Path) -> None:
    """Raise unless ``p`` is a path of ``g``.

    Raises:
        InputError: The path is empty, leaves the vertex range, repeats a vertex
            consecutively or uses a non-edge.
    """
    if not p.vertices:
        raise InputError("a path has at least one vertex")
    for v in p.vertices:
        if not 0 <= v < g.n:
            raise InputError(f"path vertex {v} lies outside 0..{g.n - 1}")
    for u, v in zip(p.vertices, p.vertices[1:]):
        if u == v or not g.adjacent(u, v):
            raise InputError(f"path step {u} - {v} is not an edge")


def is_minimal_path(g: Graph, p: Path) -> bool:
    """Return whether no two non-consecutive vertices of ``p`` are adjacent or equal."""
    validate_path(g, p)
    vs = p.vertices
    return not any(
        g.adjacent(vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 2, len(vs))
    )


def _shortcut(g: Graph, vs: list[int]) -> tuple[int, int] | None:
    for i in range(len(vs)):
        for j in range(len(vs) - 1, i + 1, -1):
            if g.adjacent(vs[i], vs[j]):
                return i, j
    return None


def refine_to_minimal(g: Graph, p: Path) -> Path:
    """Shortcut ``p`` until it is minimal.

    Each step takes the smallest ``i`` and then the largest ``j > i + 1`` with
    ``v_i`` adjacent to ``v_j`` and splices the path there; a repeated vertex
    collapses to a single occurrence. The result has the same endpoints and is
    a subsequence of ``p``.
    """
    validate_path(g, p)
    vs = list(p.vertices)
    while (step := _shortcut(g, vs)) is not None:
        i, j = step
        if vs[i] == vs[j]:
            vs = vs[:i] + vs[j:]
        else:
            vs = vs[: i + 1] + vs[j:]
    return Path.of(vs)


__all__ = ["Path", "is_minimal_path", "refine_to_minimal", "validate_path"]
