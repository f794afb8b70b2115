"""Recognition of the graph classes that gate the polynomial algorithms."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .families import c6_variant
from .graph import Bipartition, Graph, bits, complement, two_coloring
from .intervalrep import IntervalRep, intersects

MEMBER_NAMES = ("C6", "C6^1", "C6^2", "C6^3")


@dataclass(frozen=True)
class ForbiddenFamily:
    """A subset of the four six-vertex graphs C6 plus 0..3 chords on one side."""

    chord_counts: frozenset[int]

    @property
    def members(self) -> dict[str, Graph]:
        return {MEMBER_NAMES[i]: c6_variant(i) for i in sorted(self.chord_counts)}


H_FAMILY = ForbiddenFamily(frozenset({0, 1, 2, 3}))
H_PRIME = ForbiddenFamily(frozenset({1, 2, 3}))
C6_ONLY = ForbiddenFamily(frozenset({0}))


@dataclass(frozen=True)
class InducedMember:
    """``vertices[i]`` plays the role of vertex i of ``c6_variant(chords)``."""

    vertices: tuple[int, ...]
    chords: int

    @property
    def name(self) -> str:
        return MEMBER_NAMES[self.chords]


@dataclass(frozen=True)
class Peo:
    order: tuple[int, ...]


def _as_member(g: Graph, xs: tuple[int, int, int], vs: tuple[int, int, int]) -> InducedMember:
    chords = sum(1 for i, j in ((0, 1), (1, 2), (0, 2)) if vs[j] in g.adj[vs[i]])
    target = c6_variant(chords).edge_set()
    # rotate roles until the labelling is an exact isomorphism onto c6_variant
    for p in permutations(range(3)):
        x = [xs[i] for i in p]
        v = [vs[i] for i in p]
        emb = (x[0], v[2], x[1], v[0], x[2], v[1])
        pos = {u: i for i, u in enumerate(emb)}
        got = {tuple(sorted((pos[a], pos[b]))) for a in emb for b in g.adj[a] if b in pos and a < b}
        if got == target:
            return InducedMember(emb, chords)
    raise AssertionError("connector pattern is not a member")


def find_induced_member(g: Graph, fam: ForbiddenFamily = H_FAMILY) -> InducedMember | None:
    """Search for an induced member of ``fam``.

    Every member has an independent triple x1, x2, x3 (one side of the
    hexagon) and connectors v_i adjacent to the other two x's but not to x_i.
    Any such choice induces the member whose chord count is the number of
    edges among the connectors, so it suffices to enumerate triples and
    connector candidates.
    """
    adj = g.adj
    want = fam.chord_counts
    for x1 in range(g.n):
        for x2 in range(x1 + 1, g.n):
            if x2 in adj[x1]:
                continue
            c12 = adj[x1] & adj[x2]
            if not c12:
                continue
            for x3 in range(x2 + 1, g.n):
                if x3 in adj[x1] or x3 in adj[x2]:
                    continue
                p3 = c12 - adj[x3]
                p1 = (adj[x2] & adj[x3]) - adj[x1]
                p2 = (adj[x1] & adj[x3]) - adj[x2]
                if not (p1 and p2 and p3):
                    continue
                for v1 in sorted(p1):
                    for v2 in sorted(p2):
                        e12 = v2 in adj[v1]
                        for v3 in sorted(p3):
                            cnt = e12 + (v3 in adj[v2]) + (v3 in adj[v1])
                            if cnt in want:
                                return _as_member(g, (x1, x2, x3), (v1, v2, v3))
    return None


def _canonical6(edges: set[tuple[int, int]]) -> int:
    best = None
    for p in permutations(range(6)):
        code = 0
        for a, b in edges:
            a, b = p[a], p[b]
            if a > b:
                a, b = b, a
            code |= 1 << (a * 6 + b)
        if best is None or code < best:
            best = code
    return best  # type: ignore[return-value]


_CANON: dict[int, int] = {}


def naive_find_induced_member(g: Graph, fam: ForbiddenFamily = H_FAMILY) -> InducedMember | None:
    """Reference search: every 6-subset tested for isomorphism by permutation."""
    if not _CANON:
        for i in range(4):
            _CANON[_canonical6(set(c6_variant(i).edges()))] = i
    for sub in combinations(range(g.n), 6):
        pos = {u: i for i, u in enumerate(sub)}
        edges = {(pos[a], pos[b]) for a in sub for b in g.adj[a] if b in pos and a < b}
        if not 6 <= len(edges) <= 9 or any(sum(1 for e in edges if u in e) < 2 for u in range(6)):
            continue
        i = _CANON.get(_canonical6(edges))
        if i is not None and i in fam.chord_counts:
            return InducedMember(tuple(sub), i)
    return None


# ----------------------------------------------------------------- chordality

def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns vertices in visit order."""
    weight = [0] * g.n
    buckets: list[set[int]] = [set(range(g.n))]
    done = [False] * g.n
    top = 0
    order = []
    for _ in range(g.n):
        while not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].remove(v)
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                buckets[weight[u]].remove(u)
                weight[u] += 1
                if weight[u] == len(buckets):
                    buckets.append(set())
                buckets[weight[u]].add(u)
                top = max(top, weight[u])
    return order


def is_peo(g: Graph, order: list[int] | tuple[int, ...]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda u: pos[u])
        for u in later:
            if u != p and u not in g.adj[p]:
                return False
    return True


def is_chordal(g: Graph) -> Peo | None:
    order = mcs_order(g)[::-1]
    return Peo(tuple(order)) if is_peo(g, order) else None


# ------------------------------------------------------- chordal bipartiteness

@dataclass(frozen=True)
class ChordalBipartiteResult:
    is_chordal_bipartite: bool
    bipartition: Bipartition | None
    odd_cycle: tuple[int, ...] | None = None
    long_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.is_chordal_bipartite


def find_induced_cycle(g: Graph, min_len: int = 4, exact_len: int | None = None) -> tuple[int, ...] | None:
    """An induced cycle of length >= ``min_len`` (or exactly ``exact_len``).

    Induced paths are grown from each start vertex s using only vertices
    greater than s, so each cycle is found from its smallest vertex.  The
    search is exponential in the worst case.
    """
    adj = g.adj
    lo = exact_len if exact_len is not None else min_len
    hi = exact_len if exact_len is not None else g.n

    def grow(path: list[int], on_path: set[int]) -> tuple[int, ...] | None:
        end = path[-1]
        interior = path[1:-1]
        for w in sorted(adj[end]):
            if w <= path[0] or w in on_path:
                continue
            if any(u in adj[w] for u in interior):
                continue
            if path[0] in adj[w]:
                if lo <= len(path) + 1 <= hi:
                    return tuple(path + [w])
                continue
            if len(path) + 1 >= hi:
                continue
            path.append(w)
            on_path.add(w)
            got = grow(path, on_path)
            on_path.discard(w)
            path.pop()
            if got:
                return got
        return None

    for s in range(g.n):
        for t in sorted(adj[s]):
            if t < s:
                continue
            got = grow([s, t], {s, t})
            if got:
                return got
    return None


def _bisimplicial(masks: list[int], x: int, y: int) -> bool:
    nx, ny = masks[x], masks[y]
    for a in bits(ny):
        if nx & ~masks[a]:
            return False
    return True


def is_chordal_bipartite(g: Graph) -> ChordalBipartiteResult:
    """Bipartite check plus greedy bisimplicial-edge elimination.

    Deleting a bisimplicial edge keeps a chordal bipartite graph chordal
    bipartite, and an induced long cycle never offers one, so the greedy
    run gets stuck exactly when such a cycle exists.  The cycle itself is
    then located by :func:`find_induced_cycle`.
    """
    bip, odd = two_coloring(g)
    if bip is None:
        return ChordalBipartiteResult(False, None, odd_cycle=tuple(odd or ()))
    masks = list(g.masks)
    edges = set(g.edges())
    while edges:
        for x, y in sorted(edges):
            if _bisimplicial(masks, x, y):
                edges.discard((x, y))
                masks[x] &= ~(1 << y)
                masks[y] &= ~(1 << x)
                break
        else:
            cyc = find_induced_cycle(g, min_len=6)
            return ChordalBipartiteResult(False, bip, long_cycle=cyc)
    return ChordalBipartiteResult(True, bip)


# ------------------------------------------------------- diamonds, co-bipartite

def find_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """Edge uv with two non-adjacent common neighbours, as (u, v, x, y)."""
    for u, v in g.edges():
        common = sorted(g.adj[u] & g.adj[v])
        for i, x in enumerate(common):
            for y in common[i + 1:]:
                if y not in g.adj[x]:
                    return (u, v, x, y)
    return None


def is_diamond_free(g: Graph) -> bool:
    return find_diamond(g) is None


def list_maximal_cliques_diamond_free(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques of a diamond-free graph, sorted.

    In a diamond-free graph the common neighbourhood of an edge is a clique,
    so each edge lies in exactly one maximal clique.  Isolated vertices give
    singleton cliques.
    """
    d = find_diamond(g)
    if d is not None:
        raise ValueError(f"graph has a diamond on {d}")
    found = set()
    for u, v in g.edges():
        found.add(tuple(sorted({u, v} | (g.adj[u] & g.adj[v]))))
    for v in range(g.n):
        if not g.adj[v]:
            found.add((v,))
    return sorted(found)


def is_co_bipartite(g: Graph) -> Bipartition | None:
    """Partition into two cliques, when one exists."""
    bip, _ = two_coloring(complement(g))
    return bip


def find_independent_triple(g: Graph) -> tuple[int, int, int] | None:
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if b in g.adj[a]:
                continue
            rest = set(range(b + 1, g.n)) - g.adj[a] - g.adj[b]
            if rest:
                return (a, b, min(rest))
    return None


# ----------------------------------------------------------- interval checks

@dataclass(frozen=True)
class RepMismatch:
    u: int
    v: int
    in_graph: bool

    def __str__(self) -> str:
        side = "edge in graph but intervals disjoint" if self.in_graph else "intervals meet but no edge"
        return f"pair {self.u}-{self.v}: {side}"


def validate_interval_rep(g: Graph, rep: IntervalRep) -> RepMismatch | None:
    """None when the intersection graph of ``rep`` equals ``g``."""
    if rep.n != g.n:
        raise ValueError(f"representation has {rep.n} intervals, graph has {g.n} vertices")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meet = intersects(rep.intervals[u], rep.intervals[v])
            if meet != (v in g.adj[u]):
                return RepMismatch(u, v, not meet)
    return None
