"""Maximum separated cluster of an interval graph from its representation.

Pipeline: canonicalize endpoints, sweep for maximal cliques, expand each
maximal clique into its left/right sub-cliques, join sub-cliques that cannot
coexist in a cluster, and solve a maximum weight independent set on the
resulting conflict graph along its umbrella-free order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits
from .intervalrep import IntervalRep
from .oracles import SeparatedCluster, verify_separated_cluster
from .recognition import validate_interval_rep


class RepresentationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CliqueFamilyEntry:
    """Sub-clique of maximal clique ``source_clique`` cut by positions p and q.

    ``members`` are the vertices of the clique whose left endpoint is at least
    that of the p-th vertex in left order and whose right endpoint is at most
    that of the q-th vertex in right order.  Positions are 0-based.
    """

    source_clique: int
    p: int
    q: int
    members: frozenset[int]
    helly: tuple[int, int]


@dataclass(frozen=True)
class ConflictGraph:
    entries: tuple[CliqueFamilyEntry, ...]
    weights: tuple[int, ...]
    graph: Graph
    order: tuple[int, ...]


@dataclass(frozen=True)
class IntervalClusterResult:
    size: int
    cluster: SeparatedCluster
    chosen: tuple[CliqueFamilyEntry, ...]


def canonicalize_rep(rep: IntervalRep) -> IntervalRep:
    """Distinct endpoints with the same intersection graph.

    A representation whose 2n endpoints are already distinct is returned
    unchanged.  Otherwise endpoints are replaced by their rank, where equal
    coordinates order lefts before rights so touching intervals still meet.
    """
    if rep.endpoints_distinct():
        return rep
    events = []
    for v, (lo, hi) in enumerate(rep.intervals):
        events.append((lo, 0, v))
        events.append((hi, 1, v))
    events.sort()
    out = [[0, 0] for _ in range(rep.n)]
    for rank, (_, kind, v) in enumerate(events):
        out[v][kind] = rank
    return IntervalRep.of(out)


def maximal_cliques_sweep(rep: IntervalRep) -> list[frozenset[int]]:
    """Maximal cliques from left to right.

    The active set is a maximal clique exactly when a right endpoint
    directly follows a left endpoint in the sweep.
    """
    if not rep.endpoints_distinct():
        rep = canonicalize_rep(rep)
    events = sorted([(lo, 0, v) for v, (lo, _) in enumerate(rep.intervals)]
                    + [(hi, 1, v) for v, (_, hi) in enumerate(rep.intervals)])
    active: set[int] = set()
    out = []
    last_left = False
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            last_left = True
        else:
            if last_left:
                out.append(frozenset(active))
            active.discard(v)
            last_left = False
    return out


def clique_family(rep: IntervalRep, cliques: list[frozenset[int]],
                  dedup: bool = True) -> list[CliqueFamilyEntry]:
    """Every nonempty left/right sub-clique of every maximal clique.

    With ``dedup`` an entry whose member set was already produced is dropped,
    so the survivor carries the smallest (i, p, q).
    """
    out = []
    seen: set[frozenset[int]] = set()
    for i, clique in enumerate(cliques):
        l_list = sorted(clique, key=rep.left)
        r_list = sorted(clique, key=rep.right)
        for p, vp in enumerate(l_list):
            lcut = rep.left(vp)
            for q, uq in enumerate(r_list):
                rcut = rep.right(uq)
                members = frozenset(u for u in clique if rep.left(u) >= lcut and rep.right(u) <= rcut)
                if not members:
                    continue
                if dedup:
                    if members in seen:
                        continue
                    seen.add(members)
                helly = (max(rep.left(u) for u in members), min(rep.right(u) for u in members))
                out.append(CliqueFamilyEntry(i, p, q, members, helly))
    return out


def conflict_graph(g: Graph, entries: list[CliqueFamilyEntry]) -> ConflictGraph:
    """Entries conflict when they share a vertex, touch by an edge, or share an outside neighbour."""
    masks = g.masks
    mem = []
    nbr = []
    for e in entries:
        m = 0
        nb = 0
        for u in e.members:
            m |= 1 << u
            nb |= masks[u]
        mem.append(m)
        nbr.append(nb)
    t = len(entries)
    edges = []
    for i in range(t):
        mi, ni = mem[i], nbr[i]
        for j in range(i + 1, t):
            mj, nj = mem[j], nbr[j]
            if mi & mj or ni & mj or (ni & nj & ~(mi | mj)):
                edges.append((i, j))
    cg = Graph.from_edges(t, edges)
    order = sorted(range(t), key=lambda j: (entries[j].helly[1], j))
    return ConflictGraph(tuple(entries), tuple(len(e.members) for e in entries), cg, tuple(order))


def find_umbrella(g: Graph, order) -> tuple[int, int, int] | None:
    """First triple a < b < c in ``order`` with ac an edge but ab and bc not."""
    order = list(order)
    t = len(order)
    pos = {v: i for i, v in enumerate(order)}
    pos_mask = []
    for v in order:
        m = 0
        for u in g.adj[v]:
            m |= 1 << pos[u]
        pos_mask.append(m)
    for a in range(t):
        na = pos_mask[a]
        for c in bits(na >> (a + 1)):
            c += a + 1
            between = ((1 << c) - 1) & ~((1 << (a + 1)) - 1)
            bad = between & ~na & ~pos_mask[c]
            if bad:
                b = (bad & -bad).bit_length() - 1
                return (order[a], order[b], order[c])
    return None


def check_umbrella_free(cg: ConflictGraph | Graph, order=None) -> tuple[int, int, int] | None:
    """None when the ordering is umbrella-free, else a violating triple."""
    if isinstance(cg, ConflictGraph):
        return find_umbrella(cg.graph, cg.order if order is None else order)
    return find_umbrella(cg, range(cg.n) if order is None else order)


def mwis_umbrella_dp(cg: ConflictGraph) -> tuple[int, list[int]]:
    """Maximum weight independent set along an umbrella-free order.

    Along such an order, non-adjacency of consecutive picks implies
    non-adjacency of all picks, so best(j) only looks at one predecessor.
    Returns the weight and the chosen entry indices in order.
    """
    order = cg.order
    adj = cg.graph.adj
    w = cg.weights
    best: list[int] = []
    pred: list[int] = []
    for j, vj in enumerate(order):
        b, p = 0, -1
        for i in range(j):
            if order[i] not in adj[vj] and best[i] > b:
                b, p = best[i], i
        best.append(w[vj] + b)
        pred.append(p)
    if not best:
        return 0, []
    top = max(range(len(best)), key=lambda j: (best[j], -j))
    chosen = []
    j = top
    while j != -1:
        chosen.append(order[j])
        j = pred[j]
    chosen.reverse()
    return best[top], chosen


def separated_cluster_interval(g: Graph, rep: IntervalRep) -> IntervalClusterResult:
    bad = validate_interval_rep(g, rep)
    if bad is not None:
        raise RepresentationMismatch(str(bad))
    rep = canonicalize_rep(rep)
    cliques = maximal_cliques_sweep(rep)
    entries = clique_family(rep, cliques)
    cg = conflict_graph(g, entries)
    umb = check_umbrella_free(cg)
    if umb is not None:
        raise AssertionError(f"conflict graph order has an umbrella {umb}")
    weight, chosen = mwis_umbrella_dp(cg)
    picked = [cg.entries[j] for j in chosen]
    verts = sorted(v for e in picked for v in e.members)
    if len(verts) != weight:
        raise AssertionError("chosen entries overlap")
    verdict = verify_separated_cluster(g, verts)
    if not verdict:
        raise AssertionError(f"interval cluster failed verification: {verdict.reason}")
    return IntervalClusterResult(weight, SeparatedCluster(tuple(verts)), tuple(picked))
