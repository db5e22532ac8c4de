"""Chordless cycle search."""

from collections import deque
from collections.abc import Callable

import networkx as nx

from common.logging import get_logger
from graph_core import Graph
from recognition.obstruction import Obstruction

logger = get_logger(__name__)


def _distances(g: Graph, source: int, allowed: Callable[[int], bool]) -> dict[int, int]:
    """Breadth-first distances from ``source`` through vertices satisfying ``allowed``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist and allowed(y):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _shortest_hole_length(g: Graph) -> int | None:
    """Return the number of vertices on a shortest chordless cycle of length at least four.

    Every such cycle runs ``v, a, ..., y, b`` where ``a`` and ``b`` are
    non-adjacent neighbors of ``v`` and ``a, ..., y`` is a shortest path that
    avoids the rest of the closed neighborhood of ``v``.
    """
    best: int | None = None
    for v in g.vertices:
        closed = g.closed_neighborhood(v)
        for a in g.neighbors(v):
            dist = _distances(g, a, lambda y: y not in closed)
            for b in g.neighbors(v):
                if b == a or g.adjacent(a, b):
                    continue
                reach = [dist[y] for y in g.neighbors(b) if y in dist and y not in closed]
                if reach and (best is None or min(reach) + 3 < best):
                    best = min(reach) + 3
    return best


def _extend(g: Graph, path: list[int], length: int, dist: dict[int, int]) -> list[int] | None:
    """Depth-first search for an induced path closing into a chordless cycle of ``length``.

    Every vertex after ``path[0]`` is larger than it, the new vertex is adjacent
    to the last one only (and to ``path[0]`` when it closes the cycle), and the
    second vertex is smaller than the last so that each cycle is met once.
    ``dist`` holds distances back to ``path[0]`` through vertices no smaller
    than it; a vertex too far away to close in time is skipped.
    """
    start = path[0]
    closing = len(path) == length - 1
    last = path[-1]
    for w in sorted(g.neighbors(last)):
        if w <= start or w in path:
            continue
        if dist.get(w, length) > length - len(path):
            continue
        if any(g.adjacent(w, p) for p in path[1:-1]):
            continue
        if closing:
            if not g.adjacent(w, start) or w < path[1]:
                continue
            return path + [w]
        if len(path) > 1 and g.adjacent(w, start):
            continue
        found = _extend(g, path + [w], length, dist)
        if found is not None:
            return found
    return None


def check_triangulated(g: Graph) -> Obstruction | None:
    """Return ``None`` when ``g`` is triangulated, else its shortest chordless cycle.

    Among the shortest cycles the lexicographically least vertex sequence is
    returned, starting at its smallest vertex and continuing towards the smaller
    of its two neighbors on the cycle.
    """
    if nx.is_chordal(g.to_networkx()):
        return None
    length = _shortest_hole_length(g)
    if length is None:
        return None
    for start in g.vertices:
        dist = _distances(g, start, lambda y, start=start: y >= start)
        cycle = _extend(g, [start], length, dist)
        if cycle is not None:
            logger.debug(f"chordless cycle of length {length}: {cycle}")
            return Obstruction(kind="chordless_cycle", cycle=tuple(cycle))
    return None


__all__ = ["check_triangulated"]
