"""Instance generators for the hardness gadgets, the C6-free bipartite
construction and the cd-chromatic versus total-domination gap family.

Every generator checks the structure it promises (vertex count, regularity,
triangle-freeness) and raises :class:`ConstructionError` instead of
returning a malformed graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Bipartition, Graph, is_connected, regular_degree, structural_queries, two_coloring
from .oracles import CdColoring, TotalDominatingSet, verify_cd_coloring, verify_total_dominating
from .poly import PreconditionError
from .recognition import find_diamond, list_maximal_cliques_diamond_free


class ConstructionError(RuntimeError):
    """A generated graph failed its own structural check."""


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    root: int
    tags: tuple[str, ...]
    # constructive coloring of the gadget alone: (members, dominator) pairs
    classes: tuple[tuple[tuple[int, ...], int], ...]
    roots: tuple[int, ...] = ()

    def coloring(self) -> CdColoring:
        return CdColoring.from_classes(self.graph.n, [c for c, _ in self.classes],
                                       [d for _, d in self.classes])


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    offset: int
    provenance: tuple[str, ...]
    source_n: int
    gadget_classes: tuple[tuple[tuple[int, ...], int], ...] = field(repr=False, default=())

    def lift_coloring(self, c: CdColoring) -> CdColoring:
        """Extend a cd-coloring of the source graph by the gadgets' own classes.

        The result has ``c.k + offset`` classes.
        """
        if len(c.class_of) != self.source_n:
            raise ValueError("coloring does not match the source graph")
        classes = [list(m) for m in c.classes()] + [list(m) for m, _ in self.gadget_classes]
        doms = list(c.dominator_of) + [d for _, d in self.gadget_classes]
        return CdColoring.from_classes(self.graph.n, classes, doms)


@dataclass(frozen=True)
class BipartiteBuild:
    graph: Graph
    bipartition: Bipartition
    universal: int
    cliques: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GapFamilyOutput:
    graph: Graph
    base: Graph
    coloring_cert: CdColoring
    tds_cert: TotalDominatingSet
    stated_classes: int
    stated_tds: int
    provenance: tuple[str, ...] = field(repr=False, default=())


# ------------------------------------------------------------------ builders

class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.tags: list[str] = []

    def add(self, tag: str) -> int:
        self.tags.append(tag)
        self.n += 1
        return self.n - 1

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def embed(self, gadget: Gadget, prefix: str) -> int:
        base = self.n
        for t in gadget.tags:
            self.add(f"{prefix}:{t}")
        for u, v in gadget.graph.edges():
            self.join(base + u, base + v)
        return base

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _star_of_blocks(b: _Builder, root: int, d: int, blocks: int, label: str):
    """Leaves under ``root``, each joined to the A side of its own K_{d-1,d-1};
    B sides of blocks (1,2), (3,4), ... are matched in reversed order."""
    classes = []
    leaves, sides = [], []
    for i in range(1, blocks + 1):
        leaves.append(b.add(f"{label}leaf{i}"))
        b.join(root, leaves[-1])
    for i in range(1, blocks + 1):
        a_side = [b.add(f"{label}A{i}.{k}") for k in range(d - 1)]
        b_side = [b.add(f"{label}B{i}.{k}") for k in range(d - 1)]
        for x in a_side:
            b.join(leaves[i - 1], x)
            for y in b_side:
                b.join(x, y)
        sides.append((a_side, b_side))
    for i in range(0, blocks - 1, 2):
        left, right = sides[i][1], sides[i + 1][1]
        for k in range(d - 1):
            b.join(left[k], right[d - 2 - k])
    for i, (a_side, b_side) in enumerate(sides):
        # leaf plus B side under an A vertex; A side (and the root, once) under the leaf
        classes.append(((leaves[i], *b_side), a_side[0]))
        a_cls = tuple(a_side) + ((root,) if i == 0 else ())
        classes.append((a_cls, leaves[i]))
    return classes


def _finish_gadget(b: _Builder, root: int, classes, roots=()) -> Gadget:
    g = b.graph()
    cls = tuple((tuple(sorted(m)), d) for m, d in classes)
    gadget = Gadget(g, root, tuple(b.tags), cls, tuple(roots))
    verdict = verify_cd_coloring(g, gadget.coloring())
    if not verdict:
        raise ConstructionError(f"gadget coloring invalid: {verdict.reason}")
    return gadget


CUBIC_LETTERS = "abcdehifgjk"


def gadget_w_cubic() -> Gadget:
    """The 11-vertex gadget for maximum degree 3.

    Root a with leaves b, c; b sees A1 = {d, e}, c sees A2 = {f, g};
    A1 x B1 and A2 x B2 are K_{2,2} with B1 = {h, i}, B2 = {j, k}; and the
    B sides are matched h-k, i-j.
    """
    w = gadget_w_odd(3, _check=False)
    tags = tuple(CUBIC_LETTERS)
    return Gadget(w.graph, w.root, tags, w.classes)


def gadget_w_odd(d: int, _check: bool = True) -> Gadget:
    if _check and (d % 2 == 0 or d < 5):
        raise ValueError("d must be odd and at least 5")
    b = _Builder()
    root = b.add("root")
    classes = _star_of_blocks(b, root, d, d - 1, "")
    g = _finish_gadget(b, root, classes)
    if g.graph.n != 2 * d * d - 3 * d + 2:
        raise ConstructionError("odd gadget has the wrong size")
    return g


def gadget_w_even(d: int) -> Gadget:
    """Two adjacent halves, each a root over d-2 leaves and blocks."""
    if d % 2 or d < 4:
        raise ValueError("d must be even and at least 4")
    b = _Builder()
    ra = b.add("W1.root")
    classes = _star_of_blocks(b, ra, d, d - 2, "W1.")
    rb = b.add("W2.root")
    classes += _star_of_blocks(b, rb, d, d - 2, "W2.")
    b.join(ra, rb)
    g = _finish_gadget(b, ra, classes, roots=(ra, rb))
    if g.graph.n != 2 * (2 * d * d - 5 * d + 3):
        raise ConstructionError("even gadget has the wrong size")
    return g


def _source_builder(g: Graph) -> _Builder:
    b = _Builder()
    for v in range(g.n):
        b.add(f"v{v}")
    b.edges.extend(g.edges())
    return b


def _check_regular_triangle_free(h: Graph, d: int) -> None:
    rep = structural_queries(h)
    if rep.regular_degree != d:
        raise ConstructionError(f"output is not {d}-regular")
    if not rep.is_triangle_free:
        raise ConstructionError(f"output has a triangle {rep.triangle}")


def _place(b: _Builder, gadget: Gadget, prefix: str, out_classes: list) -> int:
    base = b.embed(gadget, prefix)
    for m, dom in gadget.classes:
        out_classes.append((tuple(base + x for x in m), base + dom))
    return base


def reduce_totaldom_to_cdcolor_cubic(g: Graph) -> ReductionOutput:
    bip, odd = two_coloring(g)
    if bip is None:
        raise PreconditionError("graph is not bipartite", tuple(odd or ()))
    for v in range(g.n):
        if g.degree(v) == 0:
            raise PreconditionError(f"vertex {v} is isolated", (v,))
        if g.degree(v) > 3:
            raise PreconditionError(f"vertex {v} has degree {g.degree(v)} > 3", (v,))
    b = _source_builder(g)
    w = gadget_w_cubic()
    classes: list = []
    x = y = 0
    for v in range(g.n):
        need = 3 - g.degree(v)
        x += need == 1
        y += need == 2
        for copy in range(need):
            base = _place(b, w, f"W[v{v}.{copy}]", classes)
            b.join(v, base + w.root)
    h = b.graph()
    if h.n != g.n + 11 * x + 22 * y:
        raise ConstructionError("vertex count mismatch")
    _check_regular_triangle_free(h, 3)
    return ReductionOutput(h, 4 * x + 8 * y, tuple(b.tags), g.n, tuple(classes))


def _check_source_regular(g: Graph, deg: int) -> None:
    rep = structural_queries(g)
    if rep.regular_degree != deg:
        raise PreconditionError(f"input graph must be {deg}-regular")
    if not rep.is_triangle_free:
        raise PreconditionError("input graph has a triangle", rep.triangle or ())


def reduce_regular_odd(g: Graph, d: int) -> ReductionOutput:
    if d % 2 == 0 or d < 5:
        raise ValueError("d must be odd and at least 5")
    _check_source_regular(g, d - 2)
    w = gadget_w_odd(d)
    b = _source_builder(g)
    classes: list = []
    for v in range(g.n):
        for copy in range(2):
            base = _place(b, w, f"W[v{v}.{copy}]", classes)
            b.join(v, base + w.root)
    h = b.graph()
    if h.n - g.n != 2 * g.n * (2 * d * d - 3 * d + 2):
        raise ConstructionError("vertex count mismatch")
    _check_regular_triangle_free(h, d)
    return ReductionOutput(h, 4 * g.n * (d - 1), tuple(b.tags), g.n, tuple(classes))


def reduce_regular_even(g: Graph, d: int) -> ReductionOutput:
    """One two-root gadget per vertex pair (0, 1), (2, 3), ..."""
    if d % 2 or d < 4:
        raise ValueError("d must be even and at least 4")
    _check_source_regular(g, d - 1)
    w = gadget_w_even(d)
    b = _source_builder(g)
    classes: list = []
    for v in range(0, g.n, 2):
        base = _place(b, w, f"W[v{v},v{v + 1}]", classes)
        b.join(v, base + w.roots[0])
        b.join(v + 1, base + w.roots[1])
    h = b.graph()
    if h.n - g.n != g.n * (2 * d * d - 5 * d + 3):
        raise ConstructionError("vertex count mismatch")
    _check_regular_triangle_free(h, d)
    return ReductionOutput(h, 2 * g.n * (d - 2), tuple(b.tags), g.n, tuple(classes))


# ------------------------------------------------------- C6-free bipartite

def build_c6free_bipartite(g: Graph) -> BipartiteBuild:
    """Vertex-clique incidence graph plus one vertex joined to every clique.

    Side A holds the vertices of ``g`` (same ids) and the extra vertex
    ``g.n``; side B holds one vertex per maximal clique, from ``g.n + 1`` on.
    """
    dia = find_diamond(g)
    if dia is not None:
        raise PreconditionError(f"graph has a diamond {dia}", dia)
    cliques = list_maximal_cliques_diamond_free(g)
    u = g.n
    edges = []
    for j, c in enumerate(cliques):
        cj = g.n + 1 + j
        edges.append((u, cj))
        edges.extend((a, cj) for a in c)
    h = Graph.from_edges(g.n + 1 + len(cliques), edges)
    side_a = frozenset(range(g.n + 1))
    return BipartiteBuild(h, Bipartition(side_a, frozenset(range(h.n)) - side_a), u, tuple(cliques))


# ------------------------------------------------------------------ gap family

def gap_base_graph(n: int, d: int) -> Graph:
    """C_n plus d-3 perfect matchings, each made of a diameter and its mirror pairs.

    Iteration i (0-based) uses the diameter through vertex i: the edge
    {i, i + n/2} and the pairs {i + j, i - j} for 1 <= j < n/2.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    if n % 2 or n < max(4, 4 * (d - 3)):
        raise ValueError(f"n must be even and at least {max(4, 4 * (d - 3))}")
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    half = n // 2
    for i in range(d - 3):
        new = [(i, i + half)] + [((i + j) % n, (i - j) % n) for j in range(1, half)]
        for e in new:
            e = tuple(sorted(e))
            if e in edges:
                raise ConstructionError(f"iteration {i} repeats edge {e}")
            edges.add(e)
    base = Graph.from_edges(n, edges)
    if regular_degree(base) != d - 1:
        raise ConstructionError(f"intermediate graph is not {d - 1}-regular")
    return base


def _near_clique(b: _Builder, d: int, tag: str) -> tuple[int, int, list[int]]:
    """K_{d+1} minus the edge uv; returns u, v and the d-1 other vertices."""
    u = b.add(f"{tag}.u")
    v = b.add(f"{tag}.v")
    core = [b.add(f"{tag}.w{k}") for k in range(d - 1)]
    allv = [u, v] + core
    for i, x in enumerate(allv):
        for y in allv[i + 1:]:
            if {x, y} != {u, v}:
                b.join(x, y)
    return u, v, core


def _root_with_copies(b: _Builder, root: int, d: int, copies: int, tag: str,
                      classes: list, tds: list) -> list[int]:
    leaves: list[int] = []
    for c in range(copies):
        u, v, core = _near_clique(b, d, f"{tag}.X{c}")
        b.join(root, u)
        b.join(root, v)
        leaves += [u, v]
        # one class per core vertex, dominated by u; the root rides with the first
        for k, w in enumerate(core):
            members = (w, root) if (c == 0 and k == 0) else (w,)
            classes.append((members, u))
        tds.append(u)
    tds.append(root)
    return leaves


def gap_family(n: int, d: int) -> GapFamilyOutput:
    """d-regular graph whose cd-chromatic number is far above its total domination number.

    ``coloring_cert`` and ``tds_cert`` are the constructive certificates.
    ``stated_classes`` and ``stated_tds`` are the closed-form counts quoted
    for this family; for even d they exceed what the construction needs.
    """
    base = gap_base_graph(n, d)
    b = _source_builder(base)
    classes: list = []
    tds: list[int] = []
    if d % 2:
        copies = d // 2
        for v in range(n):
            r = b.add(f"W[v{v}].root")
            b.join(v, r)
            leaves = _root_with_copies(b, r, d, copies, f"W[v{v}]", classes, tds)
            classes.append(((v, *leaves), r))
        stated_classes = n * (copies * (d - 1) + 1)
        stated_tds = n * (copies + 1)
        per_vertex = copies * (d + 1) + 1
        if b.n - n != n * per_vertex:
            raise ConstructionError("vertex count mismatch")
    else:
        copies = (d - 2) // 2
        for v in range(0, n, 2):
            r1 = b.add(f"W[v{v},v{v + 1}].r1")
            r2 = b.add(f"W[v{v},v{v + 1}].r2")
            b.join(r1, r2)
            b.join(v, r1)
            b.join(v + 1, r2)
            for r, x, t in ((r1, v, "r1"), (r2, v + 1, "r2")):
                leaves = _root_with_copies(b, r, d, copies, f"W[v{v},v{v + 1}].{t}", classes, tds)
                classes.append(((x, *leaves), r))
        stated_classes = n * (copies * (d - 1) + 2)
        stated_tds = n * (copies + 2)
        per_pair = (d - 2) * (d + 1) + 2
        if b.n - n != (n // 2) * per_pair:
            raise ConstructionError("vertex count mismatch")
    h = b.graph()
    if regular_degree(h) != d or not is_connected(h):
        raise ConstructionError(f"gap-family graph is not a connected {d}-regular graph")
    col = CdColoring.from_classes(h.n, [m for m, _ in classes], [dom for _, dom in classes])
    cert = TotalDominatingSet(tuple(sorted(tds)))
    for what, verdict in (("coloring", verify_cd_coloring(h, col)),
                          ("total dominating set", verify_total_dominating(h, cert.vertices))):
        if not verdict:
            raise ConstructionError(f"{what} certificate invalid: {verdict.reason}")
    return GapFamilyOutput(h, base, col, cert, stated_classes, stated_tds, tuple(b.tags))
