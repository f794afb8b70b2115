import math
import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _brute import distance2_pairs, to_nx
from cdgraph.families import complete, cycle, path, petersen
from cdgraph.generators import random_bipartite
from cdgraph.graph import (
    Graph,
    GraphFormatError,
    aux_graph,
    complement,
    distances_from,
    induced_subgraph,
    parse_edge_list,
    relabel,
    square,
    structural_queries,
    to_edge_list,
    two_coloring,
)
from conftest import graphs


# ------------------------------------------------------------------ parsing

def test_parse_plain_edge_list():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3 and g.edge_set() == {(0, 1), (1, 2)}


def test_parse_header_only():
    g = parse_edge_list("3 0\n")
    assert g.n == 3 and g.m == 0


def test_parse_cycle_file():
    g = parse_edge_list("".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
    assert g.m == 6
    assert [g.degree(v) for v in range(6)] == [2] * 6
    assert nx.is_connected(to_nx(g))


def test_parse_header_with_comments_and_blank_lines():
    g = parse_edge_list("# a path\n4 2\n\n0 1\n2 3  # tail\n")
    assert g.n == 4 and g.edge_set() == {(0, 1), (2, 3)}


def test_parse_header_keeps_trailing_isolated_vertices():
    g = parse_edge_list("5 1\n0 1\n")
    assert g.n == 5 and g.isolated_vertices() == [2, 3, 4]


@pytest.mark.parametrize("text", ["0 1\n3 3\n", "0 x\n", "0 1 2 3\n", "3 1\n0 5\n", "-1 2\n"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_parse_error_names_line():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_edge_list("0 1\n2 2\n")


def test_parse_relabel_sparse_ids():
    g, used = parse_edge_list("10 20\n20 30\n", relabel=True)
    assert used == [10, 20, 30]
    assert g.edge_set() == {(0, 1), (1, 2)}


def test_roundtrip_text():
    g = petersen()
    assert parse_edge_list(to_edge_list(g)) == g


def test_parse_accepts_bytes_and_duplicate_edges():
    g = parse_edge_list(b"0 1\n1 0\n")
    assert g.m == 1


# ---------------------------------------------------------------- distances

def test_distances_examples():
    assert distances_from(cycle(6), 0) == [0, 1, 2, 3, 2, 1]
    assert distances_from(complete(4), 2) == [1, 1, 0, 1]
    assert distances_from(path(4), 0) == [0, 1, 2, 3]


def test_distances_unreachable_is_inf():
    g = Graph.from_edges(3, [(0, 1)])
    assert distances_from(g, 0)[2] == math.inf


def test_square_examples():
    sq = square(cycle(6))
    assert all(sq.degree(v) == 4 for v in range(6))
    assert square(complete(5)) == complete(5)
    assert square(path(3)) == complete(3)


def test_aux_examples():
    a = aux_graph(cycle(6))
    assert a.edge_set() == {(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)}
    assert aux_graph(complete(5)).m == 0
    assert aux_graph(path(4)).edge_set() == {(0, 2), (1, 3)}


def test_complement_examples():
    assert complement(complete(3)).m == 0
    c5c = complement(cycle(5))
    assert nx.is_isomorphic(to_nx(c5c), to_nx(cycle(5)))
    assert nx.is_isomorphic(to_nx(complement(path(4))), to_nx(path(4)))


def test_structural_examples():
    r = structural_queries(cycle(6))
    assert r.is_connected and r.regular_degree == 2 and r.is_triangle_free and r.bipartition
    r = structural_queries(complete(4))
    assert r.is_connected and r.regular_degree == 3 and not r.is_triangle_free and r.bipartition is None
    r = structural_queries(petersen())
    assert r.is_connected and r.regular_degree == 3 and r.is_triangle_free and r.bipartition is None


def test_odd_cycle_witness_is_a_cycle():
    bip, odd = two_coloring(petersen())
    assert bip is None and len(odd) % 2 == 1
    g = petersen()
    assert all(g.has_edge(odd[i], odd[(i + 1) % len(odd)]) for i in range(len(odd)))


def test_induced_subgraph_examples():
    h, old = induced_subgraph(cycle(6), [0, 2, 4])
    assert h.m == 0 and old == [0, 2, 4]
    h, _ = induced_subgraph(complete(4), [1, 2, 3])
    assert h == complete(3)


# ---------------------------------------------------------------- invariants

def test_aux_equals_square_minus_edges_exhaustive():
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        for flags in product((0, 1), repeat=len(pairs)):
            g = Graph.from_edges(n, [e for e, f in zip(pairs, flags) if f])
            assert aux_graph(g).edge_set() == square(g).edge_set() - g.edge_set()


@given(graphs(max_n=9))
def test_aux_matches_networkx_distances(g):
    assert aux_graph(g).edge_set() == distance2_pairs(g)


def test_bipartite_aux_splits_by_side():
    rng = random.Random(7)
    for _ in range(60):
        a, b = rng.randint(1, 10), rng.randint(1, 10)
        g = random_bipartite(a, b, rng.random(), rng)
        bip, _ = two_coloring(g)
        sq = square(g)
        union = {e for e in sq.edge_set() if (e[0] in bip.side_a) == (e[1] in bip.side_a)}
        assert aux_graph(g).edge_set() == union


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_relabel_commutes_with_square_and_aux(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert square(relabel(g, perm)) == relabel(square(g), perm)
    assert aux_graph(relabel(g, perm)) == relabel(aux_graph(g), perm)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))
