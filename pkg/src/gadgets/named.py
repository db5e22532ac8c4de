"""Small named graphs with known answers."""

from dataclasses import dataclass

from graph_core import Graph, graph_from_edges


@dataclass(frozen=True)
class NamedGraph:
    """A graph together with the answers every decision procedure must reproduce."""

    name: str
    graph: Graph
    interval: bool
    unique: bool | None = None
    """``None`` for graphs that are not interval graphs."""


def diamond() -> Graph:
    """Four vertices whose only non-adjacent pair is ``a``, ``c``."""
    return graph_from_edges(
        4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)], {0: "a", 1: "b", 2: "c", 3: "d"}
    )


def net() -> Graph:
    """A triangle ``a, b, c`` with pendant vertices ``x, y, z``: triangulated but asteroidal."""
    return graph_from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)],
        {0: "a", 1: "b", 2: "c", 3: "x", 4: "y", 5: "z"},
    )


def cycle4() -> Graph:
    """The chordless 4-cycle."""
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def path4() -> Graph:
    """The path ``0-1-2-3``."""
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])


def complete3() -> Graph:
    """The triangle."""
    return graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])


def star3() -> Graph:
    """A center ``0`` joined to three leaves."""
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])


def two_k2() -> Graph:
    """Two disjoint edges."""
    return graph_from_edges(4, [(0, 1), (2, 3)])


def empty3() -> Graph:
    """Three isolated vertices."""
    return graph_from_edges(3, [])


def named_graphs() -> list[NamedGraph]:
    """Return the named graphs in a fixed order."""
    return [
        NamedGraph("diamond", diamond(), interval=True, unique=True),
        NamedGraph("net", net(), interval=False),
        NamedGraph("C4", cycle4(), interval=False),
        NamedGraph("P4", path4(), interval=True, unique=True),
        NamedGraph("K3", complete3(), interval=True, unique=True),
        NamedGraph("STAR3", star3(), interval=True, unique=False),
        NamedGraph("2K2", two_k2(), interval=True, unique=True),
        NamedGraph("empty3", empty3(), interval=True, unique=False),
    ]


__all__ = [
    "NamedGraph",
    "complete3",
    "cycle4",
    "empty3",
    "diamond",
    "net",
    "named_graphs",
    "path4",
    "star3",
    "two_k2",
]
