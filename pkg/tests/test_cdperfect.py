import random

import pytest

from cdgraph.cdperfect import check_cd_perfect, check_hprime_characterization
from cdgraph.families import c6_variant, complete_bipartite, cycle, proper_interval_seven
from cdgraph.generators import gnp, random_chordal_bipartite, random_cobipartite, random_triangle_free
from cdgraph.oracles import SizeLimitExceeded
from cdgraph.poly import PreconditionError
from cdgraph.recognition import H_PRIME, find_induced_member


def test_c6_counterexample():
    r = check_cd_perfect(cycle(6))
    assert not r.is_cd_perfect
    ce = r.counterexample
    assert ce.vertices == tuple(range(6)) and (ce.chi_cd, ce.omega_s) == (4, 2)
    assert not r.condition_flags.h_free and not r.condition_flags.c6_free


def test_seven_vertex_example_not_cd_perfect():
    r = check_cd_perfect(proper_interval_seven())
    assert not r.is_cd_perfect


def test_k33_both_sides_true():
    v = check_hprime_characterization(complete_bipartite(3, 3))
    assert v.consistent and v.cd_perfect and v.c6_free and v.all_aux_k_eq_alpha


def test_c6_both_sides_false():
    v = check_hprime_characterization(cycle(6))
    assert v.consistent and not v.cd_perfect and not v.c6_free


def test_hprime_member_rejected():
    with pytest.raises(PreconditionError):
        check_hprime_characterization(c6_variant(1))


def test_size_limit():
    with pytest.raises(SizeLimitExceeded):
        check_cd_perfect(cycle(13))


def test_cobipartite_graphs_are_cd_perfect():
    rng = random.Random(50)
    for _ in range(15):
        g = random_cobipartite(rng.randint(1, 5), rng.randint(1, 5), rng.random(), rng)
        assert check_cd_perfect(g, 10).is_cd_perfect


def test_chordal_bipartite_graphs_are_cd_perfect():
    rng = random.Random(51)
    for _ in range(15):
        g = random_chordal_bipartite(rng.randint(1, 5), rng.randint(1, 5), rng)
        assert check_cd_perfect(g, 10).is_cd_perfect


def test_sufficient_condition_never_fails():
    rng = random.Random(52)
    for _ in range(60):
        g = gnp(rng.randint(2, 8), rng.uniform(0.2, 0.8), rng)
        r = check_cd_perfect(g)
        if r.condition_flags.h_free and r.condition_flags.all_aux_k_eq_alpha:
            assert r.is_cd_perfect


def test_characterization_on_triangle_free_samples():
    rng = random.Random(53)
    for _ in range(40):
        g = random_triangle_free(rng.randint(2, 9), rng.uniform(0.2, 0.7), rng)
        if find_induced_member(g, H_PRIME) is not None:
            continue
        assert check_hprime_characterization(g)
