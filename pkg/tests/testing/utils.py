import random
from itertools import permutations

from graph_core import Graph, Path, StrictPartialOrder


def random_walk(g: Graph, rng: random.Random, start: int, steps: int) -> Path:
    """Walk along edges from ``start``; stops early at an isolated vertex."""
    vs = [start]
    for _ in range(steps):
        neighbors = sorted(g.neighbors(vs[-1]))
        if not neighbors:
            break
        vs.append(rng.choice(neighbors))
    return Path.of(vs)


def has_two_plus_two(o: StrictPartialOrder) -> bool:
    """Scan every 4-tuple of distinct vertices for two unrelated 2-chains."""
    for a, b, c, d in permutations(range(o.n), 4):
        if not (o.precedes(a, b) and o.precedes(c, d)):
            continue
        if not any(o.comparable(x, y) for x in (a, b) for y in (c, d)):
            return True
    return False


def is_subsequence(short, long) -> bool:
    it = iter(long)
    return all(v in it for v in short)
