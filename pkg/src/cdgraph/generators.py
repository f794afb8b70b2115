"""Random instance generators used by the tests and the experiment scripts.

All take a ``random.Random`` so runs are reproducible from a seed.
"""
from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, complement
from .intervalrep import IntervalRep
from .recognition import find_diamond, find_induced_member, is_chordal_bipartite


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def gnp_no_isolated(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) conditioned on having no isolated vertex (n >= 2)."""
    while True:
        g = gnp(n, p, rng)
        if all(g.adj):
            return g


def random_bipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p])


def random_chordal_bipartite(a: int, b: int, rng: random.Random, deletions: int | None = None) -> Graph:
    """Delete random edges of K_{a,b} while the graph stays chordal bipartite.

    Deletions that would isolate a vertex are skipped.
    """
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    rng.shuffle(edges)
    if deletions is None:
        deletions = rng.randint(0, len(edges))
    current = set(edges)
    deg = [b] * a + [a] * b
    for e in edges[:deletions]:
        u, v = e
        if deg[u] == 1 or deg[v] == 1:
            continue
        trial = current - {e}
        if is_chordal_bipartite(Graph.from_edges(a + b, trial)):
            current = trial
            deg[u] -= 1
            deg[v] -= 1
    return Graph.from_edges(a + b, current)


def random_interval_rep(n: int, rng: random.Random, span: int | None = None,
                        max_len: int | None = None) -> IntervalRep:
    """Integer intervals; coordinates may repeat so canonicalization is exercised."""
    span = span or 3 * n + 2
    max_len = max_len or max(2, span // 3)
    out = []
    for _ in range(n):
        lo = rng.randint(0, span)
        out.append((lo, lo + rng.randint(1, max_len)))
    return IntervalRep.of(out)


def random_proper_interval_rep(n: int, rng: random.Random, avg_degree: float = 6.0) -> IntervalRep:
    """Unit-length intervals with distinct left endpoints (hence proper)."""
    length = 1000
    # [2x, 2x+2L+1] and [2y, 2y+2L+1] meet iff |x - y| <= L
    span = max(n, int(2 * n * length / max(avg_degree, 1e-9)))
    lefts = rng.sample(range(span), n)
    return IntervalRep.of([(2 * x, 2 * x + 2 * length + 1) for x in lefts])


def random_cobipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    edges = list(combinations(range(a), 2)) + list(combinations(range(a, a + b), 2))
    edges += [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return Graph.from_edges(a + b, edges)


def random_triangle_free(n: int, p: float, rng: random.Random) -> Graph:
    cand = [e for e in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(cand)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    kept = []
    for u, v in cand:
        if not nbrs[u] & nbrs[v]:
            nbrs[u].add(v)
            nbrs[v].add(u)
            kept.append((u, v))
    return Graph.from_edges(n, kept)


def random_3k1_free(n: int, p: float, rng: random.Random) -> Graph:
    """Complement of a random triangle-free graph."""
    return complement(random_triangle_free(n, p, rng))


def random_diamond_free(n: int, p: float, rng: random.Random) -> Graph:
    cand = [e for e in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(cand)
    kept: list[tuple[int, int]] = []
    for e in cand:
        trial = Graph.from_edges(n, kept + [e])
        if find_diamond(trial) is None:
            kept.append(e)
    return Graph.from_edges(n, kept)


def random_h_free(n: int, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Rejection sample from G(n, p) with random p, no isolated vertices, no induced member."""
    for _ in range(max_tries):
        g = gnp_no_isolated(n, rng.uniform(0.2, 0.9), rng)
        if find_induced_member(g) is None:
            return g
    raise RuntimeError("rejection sampling for a forbidden-family-free graph failed")
