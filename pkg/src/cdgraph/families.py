"""Small named graphs and the worked instances used throughout the tests."""
from __future__ import annotations

from itertools import combinations

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(t: int) -> Graph:
    """K_{1,t} with center 0."""
    return complete_bipartite(1, t)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


# C6 on a-b-c-d-e-f-a (ids 0..5); the extra edges sit on the side {b, d, f}.
_C6_EXTRA = [(1, 3), (3, 5), (1, 5)]


def c6_variant(i: int) -> Graph:
    """C6 with ``i`` of the chords bd, df, bf added (0 <= i <= 3)."""
    if not 0 <= i <= 3:
        raise ValueError("i must be in 0..3")
    return Graph.from_edges(6, [(j, (j + 1) % 6) for j in range(6)] + _C6_EXTRA[:i])


def proper_interval_seven() -> Graph:
    """7-vertex proper interval graph with cd-chromatic number 4 and separated-cluster number 3.

    a..e form a path, f sees b and c, g sees c and d (ids a=0 .. g=6).
    """
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 1), (5, 2), (6, 2), (6, 3)])


def degree_mix_example() -> Graph:
    """Bipartite max-degree-3 graph with two vertices each of degree 3, 2 and 1."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 1)])


# Worked interval instance on ten vertices (v1..v10 stored as 0..9).
WORKED_INTERVALS: tuple[tuple[int, int], ...] = (
    (0, 2), (3, 5), (1, 8), (7, 9), (6, 11),
    (10, 15), (13, 17), (14, 16), (12, 19), (18, 21),
)
