import random

import pytest

from cdgraph.families import complete, complete_bipartite, cycle, petersen, star
from cdgraph.generators import random_diamond_free
from cdgraph.graph import Graph, disjoint_union, induced_subgraph, structural_queries
from cdgraph.oracles import (
    cd_chromatic_exact,
    max_independent_set_exact,
    min_clique_cover_exact,
    separated_cluster_exact,
    total_domination_exact,
    verify_cd_coloring,
    verify_total_dominating,
)
from cdgraph.poly import PreconditionError
from cdgraph.recognition import C6_ONLY, find_induced_cycle, find_induced_member
from cdgraph.reductions import (
    build_c6free_bipartite,
    gadget_w_cubic,
    gadget_w_even,
    gadget_w_odd,
    gap_base_graph,
    gap_family,
    reduce_regular_even,
    reduce_regular_odd,
    reduce_totaldom_to_cdcolor_cubic,
)


def _by_tag(gadget, letters):
    return [gadget.tags.index(x) for x in letters]


# ------------------------------------------------------------------ gadget W

def test_w_structure():
    w = gadget_w_cubic()
    g = w.graph
    assert g.n == 11 and w.tags[w.root] == "a"
    t = {x: w.tags.index(x) for x in w.tags}
    named = {tuple(sorted((w.tags[u], w.tags[v]))) for u, v in g.edges()}
    expected = {("a", "b"), ("a", "c"), ("b", "d"), ("b", "e"), ("c", "f"), ("c", "g"),
                ("d", "h"), ("d", "i"), ("e", "h"), ("e", "i"),
                ("f", "j"), ("f", "k"), ("g", "j"), ("g", "k"), ("h", "k"), ("i", "j")}
    assert named == expected
    assert all(g.degree(v) == 3 for v in range(11) if v != t["a"]) and g.degree(t["a"]) == 2


def test_w_cd_number_and_triangle_free():
    w = gadget_w_cubic()
    assert cd_chromatic_exact(w.graph)[0] == 4
    assert structural_queries(w.graph).is_triangle_free
    assert w.coloring().k == 4 and verify_cd_coloring(w.graph, w.coloring())


def test_w_parts_contain_induced_c6():
    w = gadget_w_cubic()
    minus_root, _ = induced_subgraph(w.graph, [v for v in range(11) if w.tags[v] != "a"])
    assert minus_root.n == 10 and find_induced_cycle(minus_root, exact_len=6)
    core, _ = induced_subgraph(w.graph, _by_tag(w, "dehifgjk"))
    assert core.n == 8 and find_induced_cycle(core, exact_len=6)


@pytest.mark.parametrize("d", [5, 7])
def test_odd_gadget(d):
    w = gadget_w_odd(d)
    assert w.graph.n == 2 * d * d - 3 * d + 2
    assert w.coloring().k == 2 * (d - 1) and verify_cd_coloring(w.graph, w.coloring())
    assert structural_queries(w.graph).is_triangle_free
    # each matched pair of blocks contains an induced C6
    for i in range(1, d - 1, 2):
        block = [v for v, t in enumerate(w.tags) if t.startswith((f"A{i}.", f"B{i}.", f"A{i + 1}.", f"B{i + 1}."))]
        h, _ = induced_subgraph(w.graph, block)
        assert find_induced_cycle(h, exact_len=6)


@pytest.mark.parametrize("d", [4, 6])
def test_even_gadget(d):
    w = gadget_w_even(d)
    assert w.graph.n == 2 * (2 * d * d - 5 * d + 3)
    assert sum(t.startswith("W1.") for t in w.tags) == 2 * d * d - 5 * d + 3
    assert w.coloring().k == 4 * (d - 2) and verify_cd_coloring(w.graph, w.coloring())


def test_gadget_parameter_checks():
    for bad in (3, 4, 6):
        with pytest.raises(ValueError):
            gadget_w_odd(bad)
    for bad in (2, 3, 5):
        with pytest.raises(ValueError):
            gadget_w_even(bad)


# ------------------------------------------------------------ cubic reduction

def _degree_mix_six():
    # degrees 3, 2, 3, 2, 1, 1 and bipartite
    return Graph.from_edges(6, [(0, 1), (0, 3), (0, 5), (2, 1), (2, 3), (2, 4)])


def test_cubic_reduction_counts():
    out = reduce_totaldom_to_cdcolor_cubic(_degree_mix_six())
    assert out.graph.n == 6 + 11 * 2 + 22 * 2 == 72
    r = structural_queries(out.graph)
    assert r.regular_degree == 3 and r.is_triangle_free
    out = reduce_totaldom_to_cdcolor_cubic(Graph.from_edges(2, [(0, 1)]))
    assert out.graph.n == 46 and structural_queries(out.graph).regular_degree == 3


def test_cubic_reduction_rejects_bad_input():
    with pytest.raises(PreconditionError):
        reduce_totaldom_to_cdcolor_cubic(star(4))
    with pytest.raises(PreconditionError):
        reduce_totaldom_to_cdcolor_cubic(cycle(5))


def test_cubic_lift():
    g = _degree_mix_six()
    out = reduce_totaldom_to_cdcolor_cubic(g)
    k, col = cd_chromatic_exact(g)
    lifted = out.lift_coloring(col)
    assert lifted.k == k + out.offset and verify_cd_coloring(out.graph, lifted)


# ----------------------------------------------------------- regular reductions

@pytest.mark.parametrize("g,d,total", [(complete_bipartite(3, 3), 5, 450), (complete_bipartite(5, 5), 7, 1590),
                                       (petersen(), 5, 10 + 20 * 37)])
def test_regular_odd(g, d, total):
    out = reduce_regular_odd(g, d)
    assert out.graph.n == total == g.n + 2 * g.n * (2 * d * d - 3 * d + 2)
    r = structural_queries(out.graph)
    assert r.regular_degree == d and r.is_triangle_free and r.is_connected
    assert out.offset == 4 * g.n * (d - 1)


def test_regular_odd_rejects_wrong_degree():
    # C5 is 2-regular, so it is not a valid source for d = 5
    with pytest.raises(PreconditionError):
        reduce_regular_odd(cycle(5), 5)


@pytest.mark.parametrize("g,d,total", [(complete_bipartite(3, 3), 4, 96), (complete_bipartite(5, 5), 6, 460)])
def test_regular_even(g, d, total):
    out = reduce_regular_even(g, d)
    assert out.graph.n == total == g.n + g.n * (2 * d * d - 5 * d + 3)
    r = structural_queries(out.graph)
    assert r.regular_degree == d and r.is_triangle_free and r.is_connected


def test_regular_lift_verifies():
    g = complete_bipartite(3, 3)
    k, col = cd_chromatic_exact(g)
    for out in (reduce_regular_odd(g, 5), reduce_regular_even(g, 4)):
        lifted = out.lift_coloring(col)
        assert lifted.k == k + out.offset and verify_cd_coloring(out.graph, lifted)


# ----------------------------------------------------------- C6-free bipartite

def test_c6free_examples():
    b = build_c6free_bipartite(complete(3))
    assert len(b.bipartition.side_a) == 4 and len(b.bipartition.side_b) == 1
    assert len(build_c6free_bipartite(disjoint_union(complete(3), complete(3))).bipartition.side_b) == 2
    assert len(build_c6free_bipartite(cycle(5)).bipartition.side_b) == 5
    with pytest.raises(PreconditionError):
        build_c6free_bipartite(Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))


def test_c6free_outputs_have_no_induced_c6():
    rng = random.Random(40)
    for _ in range(60):
        g = random_diamond_free(rng.randint(2, 12), rng.uniform(0.2, 0.6), rng)
        b = build_c6free_bipartite(g)
        if b.graph.n > 40:
            continue
        assert structural_queries(b.graph).bipartition is not None
        assert find_induced_member(b.graph, C6_ONLY) is None
        assert find_induced_cycle(b.graph, exact_len=6) is None


def test_c6free_parameter_relationship():
    # chi_cd(B_G) = k(G) + 1 and omega_s(B_G) = alpha(G) + 1 across small diamond-free graphs
    rng = random.Random(41)
    checked = 0
    while checked < 60:
        g = random_diamond_free(rng.randint(1, 7), rng.uniform(0.2, 0.7), rng)
        b = build_c6free_bipartite(g).graph
        if b.n > 18:
            continue
        checked += 1
        chi = cd_chromatic_exact(b)[0]
        assert chi == min_clique_cover_exact(g)[0] + 1
        assert separated_cluster_exact(b)[0] == max_independent_set_exact(g)[0] + 1
        assert total_domination_exact(b)[0] == chi


# ------------------------------------------------------------------ gap family

def test_gap_base_graph():
    assert gap_base_graph(10, 3) == cycle(10)
    g = gap_base_graph(12, 5)
    assert structural_queries(g).regular_degree == 4
    with pytest.raises(ValueError):
        gap_base_graph(9, 3)


@pytest.mark.parametrize("n,d,classes,tds", [(10, 3, 30, 20), (10, 5, 90, 30), (12, 5, 108, 36),
                                             (10, 4, 40, 20), (12, 6, 132, 36)])
def test_gap_certificates(n, d, classes, tds):
    out = gap_family(n, d)
    r = structural_queries(out.graph)
    assert r.regular_degree == d and r.is_connected
    assert verify_cd_coloring(out.graph, out.coloring_cert)
    assert verify_total_dominating(out.graph, out.tds_cert.vertices)
    assert (out.coloring_cert.k, len(out.tds_cert)) == (classes, tds)
    assert out.coloring_cert.k - len(out.tds_cert) >= n


def test_gap_stated_counts():
    # odd d: the stated counts are what the construction achieves
    out = gap_family(10, 3)
    assert (out.stated_classes, out.stated_tds) == (30, 20)
    # even d: the stated counts exceed the constructive certificates by n each
    out = gap_family(10, 4)
    assert (out.stated_classes, out.stated_tds) == (50, 30)
    assert out.stated_classes - out.coloring_cert.k == 10 and out.stated_tds - len(out.tds_cert) == 10


@pytest.mark.parametrize("d", [3, 5])
def test_gap_component_matches_oracle(d):
    # a base vertex with its own gadget, cut out of the whole graph
    out = gap_family(10, d)
    piece = [0] + [v for v, t in enumerate(out.provenance) if t.startswith("W[v0]")]
    h, _ = induced_subgraph(out.graph, piece)
    copies = d // 2
    assert h.n == 2 + copies * (d + 1)
    assert total_domination_exact(h)[0] == copies + 1
    assert cd_chromatic_exact(h)[0] == copies * (d - 1) + 1
