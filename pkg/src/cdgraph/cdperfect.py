"""Desk-scale checks of cd-perfectness over all induced subgraphs."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, aux_graph, bits, induced_subgraph
from .oracles import (
    SizeLimitExceeded,
    cd_chromatic_exact,
    max_independent_set_exact,
    min_clique_cover_exact,
)
from .poly import PreconditionError
from .recognition import C6_ONLY, H_FAMILY, H_PRIME, find_induced_member

DEFAULT_SUBGRAPH_LIMIT = 12


@dataclass(frozen=True)
class Counterexample:
    vertices: tuple[int, ...]
    chi_cd: int
    omega_s: int


@dataclass(frozen=True)
class ConditionFlags:
    h_free: bool
    all_aux_k_eq_alpha: bool
    c6_free: bool


@dataclass(frozen=True)
class CdPerfectReport:
    is_cd_perfect: bool
    counterexample: Counterexample | None
    condition_flags: ConditionFlags
    subgraphs_checked: int
    # induced subgraphs with an isolated vertex have no cd-coloring and are skipped
    skips_isolated: bool = True


@dataclass(frozen=True)
class HPrimeVerdict:
    consistent: bool
    cd_perfect: bool
    c6_free: bool
    all_aux_k_eq_alpha: bool

    def __bool__(self) -> bool:
        return self.consistent


def _subsets_by_size(n: int):
    # smallest subsets first, so the first counterexample found is a smallest one
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << n):
        by_size[mask.bit_count()].append(mask)
    for group in by_size:
        yield from group


def _has_isolated(g: Graph, mask: int) -> bool:
    masks = g.masks
    for v in bits(mask):
        if not masks[v] & mask:
            return True
    return False


def aux_k_equals_alpha(g: Graph) -> bool:
    gs = aux_graph(g)
    return min_clique_cover_exact(gs)[0] == max_independent_set_exact(gs)[0]


def check_cd_perfect(g: Graph, subgraph_size_limit: int = DEFAULT_SUBGRAPH_LIMIT) -> CdPerfectReport:
    """Compare cd-chromatic and separated-cluster numbers on every induced subgraph.

    Also evaluates the sufficient condition (no induced forbidden member and
    equal clique cover and independence numbers of every auxiliary graph)
    and C6-freeness.
    """
    if g.n > subgraph_size_limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds subgraph enumeration limit {subgraph_size_limit}")
    counter = None
    all_eq = True
    checked = 0
    for mask in _subsets_by_size(g.n):
        h, old = induced_subgraph(g, bits(mask))
        gs = aux_graph(h)
        k = min_clique_cover_exact(gs)[0]
        alpha = max_independent_set_exact(gs)[0]
        if k != alpha:
            all_eq = False
        if counter is None and not _has_isolated(g, mask):
            checked += 1
            chi = cd_chromatic_exact(h)[0]
            if chi != alpha:
                counter = Counterexample(tuple(old), chi, alpha)
    flags = ConditionFlags(
        h_free=find_induced_member(g, H_FAMILY) is None,
        all_aux_k_eq_alpha=all_eq,
        c6_free=find_induced_member(g, C6_ONLY) is None,
    )
    return CdPerfectReport(counter is None, counter, flags, checked)


def check_hprime_characterization(g: Graph, limit: int = DEFAULT_SUBGRAPH_LIMIT) -> HPrimeVerdict:
    """Evaluate both sides of the characterization for graphs without C6^1, C6^2, C6^3.

    Left side: cd-perfect.  Right side: C6-free and every induced subgraph
    has an auxiliary graph with clique cover number equal to independence
    number.
    """
    member = find_induced_member(g, H_PRIME)
    if member is not None:
        raise PreconditionError(f"graph has an induced {member.name}", member.vertices)
    rep = check_cd_perfect(g, limit)
    rhs = rep.condition_flags.c6_free and rep.condition_flags.all_aux_k_eq_alpha
    return HPrimeVerdict(rep.is_cd_perfect == rhs, rep.is_cd_perfect,
                         rep.condition_flags.c6_free, rep.condition_flags.all_aux_k_eq_alpha)
