"""Closed-interval representations: the data type and its text format."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphFormatError, _int, _tokens


@dataclass(frozen=True)
class IntervalRep:
    """``intervals[v] = (left, right)`` with left < right, closed semantics."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for v, (lo, hi) in enumerate(self.intervals):
            if lo >= hi:
                raise ValueError(f"degenerate interval for vertex {v}: [{lo}, {hi}]")

    @classmethod
    def of(cls, pairs: Sequence[Sequence[int]]) -> "IntervalRep":
        return cls(tuple((int(a), int(b)) for a, b in pairs))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> int:
        return self.intervals[v][0]

    def right(self, v: int) -> int:
        return self.intervals[v][1]

    def endpoints_distinct(self) -> bool:
        pts = [x for iv in self.intervals for x in iv]
        return len(set(pts)) == len(pts)


def intersects(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def intersection_graph(rep: IntervalRep) -> Graph:
    order = sorted(range(rep.n), key=lambda v: rep.intervals[v])
    edges = []
    active: list[int] = []
    for v in order:
        lo = rep.left(v)
        active = [u for u in active if rep.right(u) >= lo]
        edges.extend((u, v) for u in active)
        active.append(v)
    return Graph.from_edges(rep.n, edges)


def is_proper(rep: IntervalRep) -> bool:
    """True when no interval properly contains another."""
    ivs = rep.intervals
    for i, (a, b) in enumerate(ivs):
        for j, (c, d) in enumerate(ivs):
            if i != j and a <= c and d <= b and (a, b) != (c, d):
                return False
    return True


def parse_interval_rep(text: bytes | str) -> IntervalRep:
    """Parse lines "id left right".  Ids must be exactly 0..n-1 in some order."""
    rows = _tokens(text)
    found: dict[int, tuple[int, int]] = {}
    for lineno, toks in rows:
        if len(toks) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'id left right'")
        v = _int(toks[0], lineno)
        try:
            lo, hi = int(toks[1]), int(toks[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed coordinate") from None
        if v in found:
            raise GraphFormatError(f"line {lineno}: duplicate id {v}")
        if lo >= hi:
            raise GraphFormatError(f"line {lineno}: degenerate interval [{lo}, {hi}]")
        found[v] = (lo, hi)
    n = len(found)
    if set(found) != set(range(n)):
        raise GraphFormatError("interval ids must be 0..n-1")
    return IntervalRep(tuple(found[v] for v in range(n)))


def to_interval_text(rep: IntervalRep) -> str:
    return "".join(f"{v} {lo} {hi}\n" for v, (lo, hi) in enumerate(rep.intervals))
