"""Polynomial routes to the cd-chromatic number through the distance-2 graph.

On graphs with no induced member of the forbidden family, the cd-chromatic
number equals the clique cover number of the auxiliary graph.  This module
computes that cover when the auxiliary graph is triangle-free (matching) or
chordal (greedy on a perfect elimination ordering), and turns each cover
part into a color class by finding a common neighbour.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, aux_graph, complement, find_triangle, is_clique, is_independent, square
from .matching import max_matching_general
from .oracles import (
    DEFAULT_COVER_LIMIT,
    CdColoring,
    IsolatedVertexError,
    SeparatedCluster,
    TotalDominatingSet,
    min_clique_cover_exact,
    resolve_limit,
    verify_cd_coloring,
    verify_separated_cluster,
    verify_total_dominating,
)
from .recognition import (
    H_FAMILY,
    InducedMember,
    Peo,
    _as_member,
    find_independent_triple,
    find_induced_member,
    is_chordal,
    is_chordal_bipartite,
    is_co_bipartite,
    is_peo,
)


class PreconditionError(ValueError):
    """Input is outside the class an algorithm is valid for."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class NotHFreeError(PreconditionError):
    def __init__(self, member: InducedMember, context: str = ""):
        msg = f"induced {member.name} on {list(member.vertices)}"
        super().__init__(f"{context}: {msg}" if context else msg, member.vertices)
        self.member = member


class UnsupportedClassError(RuntimeError):
    """No polynomial strategy applies and the instance is above the oracle limit."""


@dataclass(frozen=True)
class CliqueCover:
    parts: tuple[tuple[int, ...], ...]
    witness_independent_set: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class AuxResult:
    k: int
    coloring: CdColoring
    strategy: str
    cover: CliqueCover


@dataclass(frozen=True)
class SuiteResult:
    k: int
    coloring: CdColoring
    tds: TotalDominatingSet
    cluster: SeparatedCluster


def clique_cover_trianglefree(g: Graph) -> CliqueCover:
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError(f"graph has a triangle {tri}", tri)
    m = max_matching_general(g)
    covered = {v for pair in m.pairs for v in pair}
    parts = list(m.pairs) + [(v,) for v in range(g.n) if v not in covered]
    parts.sort()
    return CliqueCover(tuple(parts))


def clique_cover_chordal(g: Graph, peo: Peo) -> CliqueCover:
    """Greedy cover along a perfect elimination ordering.

    Walking the ordering, each still-uncovered vertex opens a part with its
    uncovered later neighbours.  The openers are pairwise non-adjacent, so
    they certify that no smaller cover exists.
    """
    order = list(peo.order)
    if not is_peo(g, order):
        raise PreconditionError("ordering is not a perfect elimination ordering")
    pos = {v: i for i, v in enumerate(order)}
    covered = [False] * g.n
    parts = []
    witness = []
    for v in order:
        if covered[v]:
            continue
        part = [v] + [u for u in g.adj[v] if pos[u] > pos[v] and not covered[u]]
        for u in part:
            covered[u] = True
        parts.append(tuple(sorted(part)))
        witness.append(v)
    return CliqueCover(tuple(parts), tuple(sorted(witness)))


def _no_dominator_witness(g: Graph, members: list[int]) -> InducedMember:
    # shrink to a minimal undominated subset; then each member-deleted subset
    # has a dominator missing exactly the deleted member
    def dom(s: list[int]) -> int | None:
        common = set(range(g.n))
        for u in s:
            common &= g.adj[u]
        return min(common) if common else None

    core = list(members)
    i = 0
    while i < len(core):
        trial = core[:i] + core[i + 1:]
        if dom(trial) is None:
            core = trial
        else:
            i += 1
    xs = core[:3]
    vs = []
    for x in xs:
        rest = [u for u in core if u != x]
        v = dom(rest)
        assert v is not None and v not in g.adj[x]
        vs.append(v)
    return _as_member(g, (xs[0], xs[1], xs[2]), (vs[0], vs[1], vs[2]))


def dominator_for_class(g: Graph, members) -> int:
    """Smallest vertex adjacent to every member of a clique of the auxiliary graph.

    Raises :class:`NotHFreeError` carrying an induced forbidden member when
    no such vertex exists.
    """
    k = sorted(set(members))
    if not k:
        raise ValueError("empty class")
    if not is_independent(g, k):
        raise PreconditionError("class is not independent in g")
    common = set(g.adj[k[0]])
    for u in k[1:]:
        common &= g.adj[u]
    if common:
        return min(common)
    if len(k) == 1:
        raise IsolatedVertexError(k[0])
    for i, u in enumerate(k):
        for w in k[i + 1:]:
            if not g.adj[u] & g.adj[w]:
                raise PreconditionError(f"{u} and {w} are not at distance 2", (u, w))
    raise NotHFreeError(_no_dominator_witness(g, k), "class has no common neighbour")


def cover_to_coloring(g: Graph, cover: CliqueCover) -> CdColoring:
    doms = [dominator_for_class(g, part) for part in cover.parts]
    return CdColoring.from_classes(g.n, cover.parts, doms)


def aux_clique_cover(gs: Graph, limit: int | None = None) -> tuple[CliqueCover, str]:
    """Minimum clique cover of an auxiliary graph by the first strategy that applies."""
    if find_triangle(gs) is None:
        return clique_cover_trianglefree(gs), "matching"
    peo = is_chordal(gs)
    if peo is not None:
        return clique_cover_chordal(gs, peo), "peo"
    cap = resolve_limit(limit, DEFAULT_COVER_LIMIT)
    if gs.n > cap:
        raise UnsupportedClassError(
            f"auxiliary graph is neither triangle-free nor chordal and n={gs.n} exceeds {cap}")
    _, parts = min_clique_cover_exact(gs, limit=cap)
    return CliqueCover(tuple(tuple(p) for p in parts)), "exact-cover"


def cd_chromatic_via_aux(g: Graph, limit: int | None = None, check_family: bool = True) -> AuxResult:
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertexError(v)
    if check_family:
        member = find_induced_member(g, H_FAMILY)
        if member is not None:
            raise NotHFreeError(member)
    gs = aux_graph(g)
    cover, strategy = aux_clique_cover(gs, limit)
    col = cover_to_coloring(g, cover)
    verdict = verify_cd_coloring(g, col)
    if not verdict:
        raise AssertionError(f"lifted coloring failed verification: {verdict.reason}")
    return AuxResult(col.k, col, strategy, cover)


def chordal_bipartite_suite(g: Graph) -> SuiteResult:
    """One value with three certificates on a chordal bipartite graph."""
    res = is_chordal_bipartite(g)
    if not res:
        wit = res.long_cycle or res.odd_cycle or ()
        raise PreconditionError("graph is not chordal bipartite", tuple(wit))
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertexError(v)
    gs = aux_graph(g)
    peo = is_chordal(gs)
    if peo is None:
        raise AssertionError("auxiliary graph of a chordal bipartite graph is not chordal")
    cover = clique_cover_chordal(gs, peo)
    col = cover_to_coloring(g, cover)
    tds = TotalDominatingSet(tuple(sorted(set(col.dominator_of))))
    cluster = SeparatedCluster(cover.witness_independent_set or ())
    for name, verdict in (("coloring", verify_cd_coloring(g, col)),
                          ("total dominating set", verify_total_dominating(g, tds.vertices)),
                          ("separated cluster", verify_separated_cluster(g, cluster.vertices))):
        if not verdict:
            raise AssertionError(f"{name} failed verification: {verdict.reason}")
    return SuiteResult(col.k, col, tds, cluster)


def threek1_aux_fastpath(g: Graph) -> Graph:
    """Auxiliary graph of a graph with no independent triple, in O(n^2).

    Without a partition into two cliques the square is complete, so the
    auxiliary graph is the complement.  With cliques A and B, a non-adjacent
    pair u in A, v in B is at distance 2 exactly when u has a neighbour in B
    or v has one in A.
    """
    triple = find_independent_triple(g)
    if triple is not None:
        raise PreconditionError(f"independent triple {triple}", triple)
    bip = is_co_bipartite(g)
    if bip is None:
        return complement(g)
    a, b = bip.side_a, bip.side_b
    a_has = {u for u in a if g.adj[u] & b}
    b_has = {v for v in b if g.adj[v] & a}
    edges = [(u, v) for u in a for v in b
             if v not in g.adj[u] and (u in a_has or v in b_has)]
    return Graph.from_edges(g.n, edges)


def square_is_complete(g: Graph) -> bool:
    sq = square(g)
    return all(len(sq.adj[v]) == g.n - 1 for v in range(g.n))


def cover_is_valid(g: Graph, cover: CliqueCover) -> bool:
    seen: list[int] = sorted(v for part in cover.parts for v in part)
    return seen == list(range(g.n)) and all(is_clique(g, p) for p in cover.parts)
