from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clustertilt.cluster import Module, ShiftedProj, cluster_category
from clustertilt.dynkin import DynkinType, all_orientations, build_dynkin
from clustertilt.tilting import (catalan, compat_graph, enumerate_cluster_tilting, expected_count,
                                 is_cluster_tilting, is_tau2_stable, maximal_cliques, selfinjective_candidates,
                                 tau_image)


def cat_of(family, rank, orientation="default"):
    return cluster_category(build_dynkin(family, rank, orientation))


def test_pentagon_graph():
    g = compat_graph(cat_of("A", 2))
    assert len(g.vertices) == 5 and g.edge_count == 5
    assert all(g.degree(i) == 2 for i in range(5))


def test_rank_one():
    c = cat_of("A", 1)
    g = compat_graph(c)
    # M(1) and P1[1] have a one-dimensional Ext_C, so the only tilting objects are singletons
    assert len(g.vertices) == 2 and g.edge_count == 0
    assert enumerate_cluster_tilting(c) == [(Module((1,)),), (ShiftedProj(1),)]


def test_projectives_mutually_compatible():
    c = cat_of("D", 5)
    proj = [Module(c.cat.projectives[a]) for a in c.quiver.vertices]
    g = compat_graph(c)
    for x in proj:
        assert g.degree(c.index[x]) >= c.n - 1
    assert is_cluster_tilting(c, proj)
    assert not is_cluster_tilting(c, proj[:-1])
    assert is_cluster_tilting(c, [ShiftedProj(a) for a in c.quiver.vertices])


def test_incompatible_pair_rejected():
    c = cat_of("A", 3)
    x = Module((0, 1, 0))
    # x and tau_c x sit in an AR triangle, so Ext_C between them is nonzero
    bad = [x, c.tau(x), ShiftedProj(1)]
    assert c.ext_c_dim(x, c.tau(x)) == 1
    assert not is_cluster_tilting(c, bad)
    assert not is_cluster_tilting(c, [x, x, ShiftedProj(1)])


@pytest.mark.parametrize("family,rank", [("A", r) for r in range(1, 7)] + [("D", r) for r in range(4, 8)]
                         + [("E", 6)])
def test_counts_match_closed_forms(family, rank):
    ts = enumerate_cluster_tilting(cat_of(family, rank))
    if family == "A":
        assert len(ts) == catalan(rank + 1)
    elif family == "D":
        assert len(ts) == (3 * rank - 2) * comb(2 * rank - 2, rank - 1) // rank
    assert len(ts) == expected_count(family, rank)


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 5), ("E", 6)])
def test_every_maximal_clique_has_n_vertices(family, rank):
    c = cat_of(family, rank)
    assert {len(k) for k in maximal_cliques(compat_graph(c))} == {rank}


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 4), ("D", 6)])
def test_closed_under_tau(family, rank):
    c = cat_of(family, rank)
    ts = enumerate_cluster_tilting(c)
    assert ts == sorted(ts)
    s = set(ts)
    assert all(tau_image(c, t) in s for t in ts)


def test_candidate_examples():
    c = cat_of("A", 3)
    cands = selfinjective_candidates(c)
    assert cands
    for t in cands:
        pos = [c.orbit_of(x).index(x) for x in t]
        assert all(len(c.orbit_of(x)) == 6 for x in t)
        assert len({p % 2 for p in pos}) == 1
        assert tau_image(c, t) in cands
    for r in (6, 7, 8):
        assert selfinjective_candidates(cat_of("E", r)) == []


def test_candidates_are_tau2_fixed():
    c = cat_of("D", 6)
    ts = enumerate_cluster_tilting(c)
    want = [t for t in ts if set(tau_image(c, t, 2)) == set(t)]
    assert selfinjective_candidates(c, ts) == want
    assert all(is_tau2_stable(c, t) for t in want)


@given(st.sampled_from(all_orientations(DynkinType("D", 5))))
def test_count_orientation_independent(q):
    c = cluster_category(q)
    assert len(enumerate_cluster_tilting(c)) == 182
    assert len(selfinjective_candidates(c)) == len(selfinjective_candidates(cat_of("D", 5)))
