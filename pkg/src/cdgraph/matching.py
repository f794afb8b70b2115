"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def mate(self, n: int) -> list[int]:
        out = [-1] * n
        for u, v in self.pairs:
            out[u], out[v] = v, u
        return out


def max_matching_general(g: Graph) -> Matching:
    """Maximum cardinality matching.

    A greedy pass seeds the matching, then every exposed vertex is used as
    the root of one alternating-tree search in which odd cycles are shrunk
    by relabelling their vertices with a common base.  A vertex whose search
    fails stays exposed for good: augmenting elsewhere never creates an
    augmenting path from it.

    Returns
    -------
    Matching
        Pairs ``(u, v)`` with ``u < v``, sorted.
    """
    n = g.n
    nbrs = [sorted(s) for s in g.adj]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[match[v]])
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> tuple[int, list[int]]:
        touched = [root]
        used[root] = True
        queue = deque([root])
        result = -1
        while queue and result == -1:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom: set[int] = set()
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in touched[:]:
                        if base[i] in blossom:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    touched.append(to)
                    if match[to] == -1:
                        result = to
                        break
                    m = match[to]
                    used[m] = True
                    touched.append(m)
                    queue.append(m)
        return result, touched

    for root in range(n):
        if match[root] != -1 or not nbrs[root]:
            continue
        end, touched = find_path(root)
        if end != -1:
            v = end
            while v != -1:
                pv = parent[v]
                ppv = match[pv]
                match[v], match[pv] = pv, v
                v = ppv
        for i in touched:
            parent[i] = -1
            base[i] = i
            used[i] = False
    pairs = tuple((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(pairs)


def verify_matching(g: Graph, m: Matching) -> bool:
    seen: set[int] = set()
    for u, v in m.pairs:
        if v not in g.adj[u] or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True
