import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustertilt.algebra import is_self_injective_algebra, kupisch_series, matches_presentation, nakayama_template
from clustertilt.cluster import Module, ShiftedProj, cluster_category
from clustertilt.dynkin import build_dynkin
from clustertilt.endalg import (build_end_algebra, end_algebra, ext2_bimodule_dims, normalize_to_modules,
                                tilted_algebra, trivial_extension_check)
from clustertilt.tilting import enumerate_cluster_tilting, selfinjective_candidates


def cat_of(family, rank, orientation="default"):
    return cluster_category(build_dynkin(family, rank, orientation))


def projective_generator(c):
    return [Module(c.cat.projectives[a]) for a in c.quiver.vertices]


def test_a2_projective_generator():
    c = cat_of("A", 2)
    data = build_end_algebra(c, projective_generator(c))
    alg = data.algebra
    assert alg.dim == 3
    assert all(b.degree == 0 for b in alg.basis)
    assert not is_self_injective_algebra(alg)


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 5), ("E", 6)])
def test_regular_module(family, rank):
    c = cat_of(family, rank)
    t = projective_generator(c)
    alg = build_end_algebra(c, t).algebra
    assert all(b.degree == 0 for b in alg.basis)
    a = tilted_algebra(c, t)
    assert a.dim == alg.dim
    assert sum(map(sum, ext2_bimodule_dims(a))) == 0
    assert trivial_extension_check(c, t).ok


def test_a3_candidate():
    c = cat_of("A", 3)
    for t in selfinjective_candidates(c):
        alg = end_algebra(c, t).algebra
        assert alg.dim == 6
        assert kupisch_series(alg) == [2, 2, 2]
        assert matches_presentation(alg, nakayama_template(3, 2)).matched


def test_normalization_examples():
    c = cat_of("D", 4)
    t = projective_generator(c)
    norm = normalize_to_modules(c, t)
    assert norm.shift == 0 and list(norm.objects) == sorted(t)
    mixed = next(x for x in enumerate_cluster_tilting(c) if any(y.is_shifted for y in x))
    norm = normalize_to_modules(c, mixed)
    assert all(y.is_module for y in norm.objects)
    all_shifted = [ShiftedProj(a) for a in c.quiver.vertices]
    norm = normalize_to_modules(c, all_shifted)
    assert norm.shift == 1
    assert sorted(norm.objects) == sorted(Module(c.cat.injectives[a]) for a in c.quiver.vertices)


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8)])
def test_candidates_normalize(family, rank):
    c = cat_of(family, rank)
    for t in selfinjective_candidates(c):
        assert all(y.is_module for y in normalize_to_modules(c, t).objects)


def test_cartan_difference_nonnegative():
    c = cat_of("D", 5)
    for t in enumerate_cluster_tilting(c)[::9]:
        norm = normalize_to_modules(c, t)
        gamma = build_end_algebra(norm.category, norm.objects).algebra
        a = tilted_algebra(norm.category, norm.objects)
        assert all(g >= x for rg, ra in zip(gamma.cartan, a.cartan) for g, x in zip(rg, ra))


tiltings_d5 = enumerate_cluster_tilting(cat_of("D", 5))


@settings(max_examples=25)
@given(st.sampled_from(tiltings_d5))
def test_end_algebra_axioms(t):
    c = cat_of("D", 5)
    data = end_algebra(c, t)
    alg = data.algebra
    assert alg.check_associativity() == []
    assert alg.check_idempotents() and alg.check_degrees()
    assert alg.is_radical_nilpotent()
    assert alg.dim == sum(c.hom_c_dim(x, y) for x in t for y in t)


@settings(max_examples=25)
@given(st.sampled_from(tiltings_d5))
def test_trivial_extension_all_tiltings(t):
    assert trivial_extension_check(cat_of("D", 5), t).ok


@given(st.sampled_from(enumerate_cluster_tilting(cat_of("A", 4, "+-+"))))
def test_end_algebra_other_orientation(t):
    c = cat_of("A", 4, "+-+")
    alg = end_algebra(c, t).algebra
    assert alg.check_associativity() == []
    assert alg.dim == sum(c.hom_c_dim(x, y) for x in t for y in t)
