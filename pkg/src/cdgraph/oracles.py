"""Exact exponential-time solvers and certificate verifiers.

Everything else in the package is checked against these.  The solvers work
on int bitmasks and are meant for graphs of up to roughly 20 vertices.

Tie-breaking is deterministic.  Vertex sets are the lexicographically
smallest optimum.  Partitions are the lexicographically smallest class
assignment, with classes numbered in order of their smallest vertex.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, aux_graph, bits, distances_from

ENV_LIMIT = "CDGRAPH_LIMIT"

DEFAULT_MIS_LIMIT = 24
DEFAULT_COVER_LIMIT = 24
DEFAULT_CD_LIMIT = 20
DEFAULT_TDS_LIMIT = 24


class SizeLimitExceeded(RuntimeError):
    """The instance is larger than the configured oracle limit."""


class IsolatedVertexError(ValueError):
    """The parameter is undefined because the graph has an isolated vertex."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is isolated")
        self.vertex = vertex


def resolve_limit(limit: int | None, default: int) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(ENV_LIMIT)
    if env:
        return int(env)
    return default


def _check_limit(g: Graph, limit: int | None, default: int, what: str) -> None:
    cap = resolve_limit(limit, default)
    if g.n > cap:
        raise SizeLimitExceeded(f"{what}: n={g.n} exceeds limit {cap}")


def _check_no_isolated(g: Graph) -> None:
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertexError(v)


# ------------------------------------------------------------------ certificates

@dataclass(frozen=True)
class CdColoring:
    class_of: tuple[int, ...]
    dominator_of: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.dominator_of)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]],
                     dominators: Sequence[int]) -> "CdColoring":
        class_of = [-1] * n
        for j, members in enumerate(classes):
            for v in members:
                if class_of[v] != -1:
                    raise ValueError(f"vertex {v} in two classes")
                class_of[v] = j
        if -1 in class_of:
            raise ValueError(f"vertex {class_of.index(-1)} has no class")
        return cls(tuple(class_of), tuple(dominators))

    def to_json(self) -> dict:
        return {"type": "cd-coloring", "k": self.k,
                "class_of": list(self.class_of), "dominator_of": list(self.dominator_of)}


@dataclass(frozen=True)
class TotalDominatingSet:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"type": "total-dominating-set", "size": len(self.vertices),
                "vertices": list(self.vertices)}


@dataclass(frozen=True)
class SeparatedCluster:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"type": "separated-cluster", "size": len(self.vertices),
                "vertices": list(self.vertices)}


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def verify_cd_coloring(g: Graph, c: CdColoring) -> Verdict:
    if len(c.class_of) != g.n:
        return Verdict(False, f"class_of has {len(c.class_of)} entries, graph has {g.n} vertices")
    k = c.k
    for v, j in enumerate(c.class_of):
        if not 0 <= j < k:
            return Verdict(False, f"vertex {v} has class {j} outside 0..{k - 1}", (v,))
    members: list[list[int]] = [[] for _ in range(k)]
    for v, j in enumerate(c.class_of):
        members[j].append(v)
    for j, cls in enumerate(members):
        if not cls:
            return Verdict(False, f"class {j} is empty", ())
        d = c.dominator_of[j]
        if not 0 <= d < g.n:
            return Verdict(False, f"dominator {d} of class {j} out of range", (j,))
        for i, u in enumerate(cls):
            if u not in g.adj[d]:
                return Verdict(False, f"class {j}: vertex {u} not adjacent to dominator {d}", (u, d))
            for w in cls[i + 1:]:
                if w in g.adj[u]:
                    return Verdict(False, f"class {j} not independent: edge {u}-{w}", (u, w))
    return OK


def verify_total_dominating(g: Graph, s: Iterable[int]) -> Verdict:
    chosen = set(s)
    for v in chosen:
        if not 0 <= v < g.n:
            return Verdict(False, f"vertex {v} out of range", (v,))
    for v in range(g.n):
        if not g.adj[v] & chosen:
            return Verdict(False, f"vertex {v} has no neighbor in the set", (v,))
    return OK


def verify_separated_cluster(g: Graph, s: Iterable[int]) -> Verdict:
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            return Verdict(False, f"vertex {v} out of range", (v,))
    for u in members:
        dist = distances_from(g, u)
        for w in members:
            if w > u and dist[w] == 2:
                common = min(g.adj[u] & g.adj[w])
                return Verdict(False, f"{u} and {w} are at distance 2 via {common}", (u, w))
    return OK


# ------------------------------------------------------------ bitmask helpers

def _maximal_cliques(masks: Sequence[int], cand: int) -> list[int]:
    """All maximal cliques of the graph given by ``masks`` restricted to ``cand``."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        # pivot with most neighbors in p
        best, best_cnt = -1, -1
        for u in bits(pivot_pool):
            cnt = (masks[u] & p).bit_count()
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        for v in bits(p & ~masks[best]):
            bv = 1 << v
            expand(r | bv, p & masks[v], x & masks[v])
            p &= ~bv
            x |= bv

    if cand:
        expand(0, cand, 0)
    return out


def _lex_key(mask: int, n: int) -> tuple[int, ...]:
    # smaller key = lexicographically preferred block (contains earlier vertices)
    return tuple(bits(mask)) + (n,)


def _min_partition(n: int, blocks_with: list[list[int]]) -> list[int]:
    """Minimum partition of V into members of a downward-closed family.

    ``blocks_with[v]`` lists maximal family members containing v.  Restricting
    them to the still-uncovered set enumerates every block that is maximal
    there, which is enough for an optimum.
    """
    memo: dict[int, tuple[int, int]] = {0: (0, 0)}

    def solve(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit[0]
        low = (mask & -mask).bit_length() - 1
        seen = set()
        best_cnt, best_blk, best_key = n + 1, 0, None
        for blk in blocks_with[low]:
            blk &= mask
            if blk in seen:
                continue
            seen.add(blk)
            cnt = 1 + solve(mask & ~blk)
            if cnt < best_cnt:
                best_cnt, best_blk, best_key = cnt, blk, None
            elif cnt == best_cnt:
                if best_key is None:
                    best_key = _lex_key(best_blk, n)
                key = _lex_key(blk, n)
                if key < best_key:
                    best_blk, best_key = blk, key
        memo[mask] = (best_cnt, best_blk)
        return best_cnt

    full = (1 << n) - 1
    solve(full)
    parts = []
    mask = full
    while mask:
        blk = memo[mask][1]
        parts.append(blk)
        mask &= ~blk
    return parts


# -------------------------------------------------------------------- solvers

def max_independent_set_exact(g: Graph, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    _check_limit(g, limit, DEFAULT_MIS_LIMIT, "max_independent_set_exact")
    masks = g.masks
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        # returns the lexicographically smallest maximum independent subset of mask
        if not mask:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        v = low.bit_length() - 1
        nb = masks[v] & mask
        take = low | best(mask & ~nb & ~low)
        if nb.bit_count() <= 1:
            res = take
        else:
            skip = best(mask & ~low)
            res = skip if skip.bit_count() > take.bit_count() else take
        memo[mask] = res
        return res

    s = best((1 << g.n) - 1)
    return s.bit_count(), tuple(bits(s))


def min_clique_cover_exact(g: Graph, limit: int | None = None) -> tuple[int, list[list[int]]]:
    _check_limit(g, limit, DEFAULT_COVER_LIMIT, "min_clique_cover_exact")
    masks = g.masks
    blocks_with: list[list[int]] = []
    for v in range(g.n):
        cl = _maximal_cliques(masks, masks[v])
        blocks_with.append([c | (1 << v) for c in cl] or [1 << v])
    parts = _min_partition(g.n, blocks_with)
    return len(parts), [bits(p) for p in parts]


def dominated_independent_blocks(g: Graph) -> list[list[int]]:
    """Per vertex, the maximal sets that are independent and inside one neighborhood."""
    masks = g.masks
    full = (1 << g.n) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(masks)]
    family: set[int] = set()
    for v in range(g.n):
        for s in _maximal_cliques(comp, masks[v]):
            family.add(s)
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for s in sorted(family):
        for u in bits(s):
            by_vertex[u].append(s)
    return by_vertex


def dominator_of_set(g: Graph, members: Iterable[int]) -> int | None:
    """Smallest vertex adjacent to every member, or None."""
    want = 0
    for u in members:
        want |= 1 << u
    for v, m in enumerate(g.masks):
        if m & want == want:
            return v
    return None


def cd_chromatic_exact(g: Graph, limit: int | None = None) -> tuple[int, CdColoring]:
    _check_no_isolated(g)
    _check_limit(g, limit, DEFAULT_CD_LIMIT, "cd_chromatic_exact")
    parts = _min_partition(g.n, dominated_independent_blocks(g))
    classes = [bits(p) for p in parts]
    doms = [dominator_of_set(g, c) for c in classes]
    col = CdColoring.from_classes(g.n, classes, doms)  # type: ignore[arg-type]
    return col.k, col


def total_domination_exact(g: Graph, limit: int | None = None) -> tuple[int, TotalDominatingSet]:
    _check_no_isolated(g)
    _check_limit(g, limit, DEFAULT_TDS_LIMIT, "total_domination_exact")
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | masks[v]
    delta = g.max_degree()

    def search(start: int, covered: int, left: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return list(chosen)
        if left == 0:
            return None
        need = full & ~covered
        if need & ~suffix[start]:
            return None
        if need.bit_count() > left * delta:
            return None
        for w in range(start, n):
            if need & ~suffix[w]:
                break
            chosen.append(w)
            got = search(w + 1, covered | masks[w], left - 1, chosen)
            chosen.pop()
            if got is not None:
                return got
        return None

    k = max(2, -(-n // max(delta, 1))) if n else 0
    while True:
        got = search(0, 0, k, [])
        if got is not None:
            return len(got), TotalDominatingSet(tuple(got))
        k += 1


def separated_cluster_exact(g: Graph, limit: int | None = None) -> tuple[int, SeparatedCluster]:
    _check_limit(g, limit, DEFAULT_MIS_LIMIT, "separated_cluster_exact")
    size, witness = max_independent_set_exact(aux_graph(g), limit=limit)
    return size, SeparatedCluster(witness)
