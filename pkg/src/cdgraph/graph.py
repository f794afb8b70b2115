"""Simple undirected graphs on dense integer ids, plus the distance-2 constructions.

A :class:`Graph` is immutable.  Every operation that "changes" a graph returns
a new one.  Adjacency is held as a tuple of frozensets; bitmask views are
computed lazily for the exponential solvers.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when edge-list or interval text cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric or out-of-range edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an int bitmask."""
        out = []
        for nb in self.adj:
            b = 0
            for u in nb:
                b |= 1 << u
            out.append(b)
        return tuple(out)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_of(self, v: int) -> int:
        return 0 if v in self.side_a else 1


@dataclass(frozen=True)
class StructureReport:
    is_connected: bool
    regular_degree: int | None
    is_triangle_free: bool
    bipartition: Bipartition | None
    has_isolated_vertex: bool
    triangle: tuple[int, int, int] | None = field(default=None, compare=False)


# ---------------------------------------------------------------- text formats

def _tokens(text: bytes | str) -> list[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    return rows


def _int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: malformed token {tok!r}") from None
    if val < 0:
        raise GraphFormatError(f"line {lineno}: negative id {val}")
    return val


def parse_edge_list(text: bytes | str, relabel: bool = False):
    """Parse "u v" lines into a Graph.

    The first line is read as an "n m" header when the remaining line count
    equals m and m is feasible for n; otherwise it is an edge.  With
    ``relabel=True`` the used ids are compacted and ``(graph, old_ids)`` is
    returned, where ``old_ids[new] = old``.
    """
    rows = _tokens(text)
    for lineno, toks in rows:
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {len(toks)}")
    pairs = [(_int(a, ln), _int(b, ln), ln) for ln, (a, b) in rows]
    declared = None
    if pairs:
        n0, m0, _ = pairs[0]
        if m0 == len(pairs) - 1 and m0 <= n0 * (n0 - 1) // 2:
            declared = n0
            pairs = pairs[1:]
    edges = []
    for u, v, ln in pairs:
        if u == v:
            raise GraphFormatError(f"line {ln}: self-loop {u} {v}")
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"line {ln}: id {max(u, v)} >= declared n={declared}")
        edges.append((u, v))
    if declared is not None:
        n = declared
    else:
        n = max((max(u, v) for u, v in edges), default=-1) + 1
    if not relabel:
        return Graph.from_edges(n, edges)
    used = sorted({x for e in edges for x in e} | (set(range(n)) if declared is not None else set()))
    index = {old: new for new, old in enumerate(used)}
    g = Graph.from_edges(len(used), ((index[u], index[v]) for u, v in edges))
    return g, used


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ distance queries

def distances_from(g: Graph, v: int) -> list[float]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    dist: list[float] = [math.inf] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == math.inf:
                dist[y] = dx
                queue.append(y)
    return dist


def _second_neighborhoods(g: Graph) -> list[set[int]]:
    # vertices at distance exactly 2, via BFS cut at depth 2
    out = []
    for v in range(g.n):
        nv = g.adj[v]
        reach: set[int] = set()
        for u in nv:
            reach |= g.adj[u]
        reach -= nv
        reach.discard(v)
        out.append(reach)
    return out


def square(g: Graph) -> Graph:
    second = _second_neighborhoods(g)
    return Graph(g.n, tuple(frozenset(g.adj[v] | second[v]) for v in range(g.n)))


def aux_graph(g: Graph) -> Graph:
    """The graph on V(g) whose edges are the pairs at distance exactly 2."""
    return Graph(g.n, tuple(frozenset(s) for s in _second_neighborhoods(g)))


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    return Graph(g.n, tuple(full - g.adj[v] - {v} for v in range(g.n)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``, relabeled 0..|s|-1 in increasing id order.

    Returns the graph and ``old_ids`` with ``old_ids[new] = old``.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {old: new for new, old in enumerate(verts)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in verts)
    return Graph(len(verts), adj), verts


def induced_mask(g: Graph, mask: int) -> Graph:
    """Like :func:`induced_subgraph` but with the subset given as a bitmask."""
    return induced_subgraph(g, bits(mask))[0]


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    base = 0
    for h in graphs:
        edges.extend((u + base, v + base) for u, v in h.edges())
        base += h.n
    return Graph.from_edges(base, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# ---------------------------------------------------------- structural queries

def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def two_coloring(g: Graph) -> tuple[Bipartition | None, list[int] | None]:
    """BFS 2-coloring.  On failure returns an odd cycle as the second item."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adj[x]):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return None, _odd_cycle(parent, x, y)
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a), None


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    on_x = {v: i for i, v in enumerate(px)}
    for j, v in enumerate(py):
        if v in on_x:
            return px[: on_x[v] + 1] + py[:j][::-1]
    raise AssertionError("BFS tree paths do not meet")


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common:
            return tuple(sorted((u, v, min(common))))  # type: ignore[return-value]
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def regular_degree(g: Graph) -> int | None:
    degs = {len(s) for s in g.adj}
    return degs.pop() if len(degs) == 1 else None


def structural_queries(g: Graph) -> StructureReport:
    tri = find_triangle(g)
    bip, _ = two_coloring(g)
    return StructureReport(
        is_connected=is_connected(g),
        regular_degree=regular_degree(g),
        is_triangle_free=tri is None,
        bipartition=bip,
        has_isolated_vertex=any(not s for s in g.adj),
        triangle=tri,
    )


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(v not in g.adj[u] for i, u in enumerate(s) for v in s[i + 1:])


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(v in g.adj[u] for i, u in enumerate(s) for v in s[i + 1:])
