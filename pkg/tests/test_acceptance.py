"""Acceptance suite: one group of tests per criterion.

Run ``python tests/test_acceptance.py`` (or plain pytest) to get one
PASS/FAIL line per criterion in the terminal summary.
"""
import time
from collections import Counter

import pytest

from clustertilt.algebra import (biserial_template, is_self_injective_algebra, is_special_biserial,
                                 nakayama_template, permutation_cycles, template_dimension)
from clustertilt.classify import classify
from clustertilt.cluster import ClusterCategory, Module, ShiftedProj, cluster_category
from clustertilt.dynkin import (all_orientations, arm_distance, build_dynkin, interior_vertices,
                                leaves, positive_roots)
from clustertilt.endalg import end_algebra
from clustertilt.figures import dot_counts, quiver_data, to_dot
from clustertilt.reps import catalogue
from clustertilt.selfcheck import criterion_mismatches, opposite_mismatches
from clustertilt.tilting import enumerate_cluster_tilting, is_tau2_stable, selfinjective_candidates

criterion = pytest.mark.criterion


def cold_category(family, rank):
    catalogue.cache_clear()
    cluster_category.cache_clear()
    return ClusterCategory(build_dynkin(family, rank))


_reports: dict = {}


def report(family, rank):
    if (family, rank) not in _reports:
        t0 = time.perf_counter()
        rep = classify(build_dynkin(family, rank))
        _reports[family, rank] = (rep, time.perf_counter() - t0)
    return _reports[family, rank]


# -- 1 ----------------------------------------------------------------------

@criterion(1, "indecomposable counts of C(H)")
@pytest.mark.parametrize("family,rank,count", [
    ("A", 3, 9), ("D", 4, 16), ("D", 5, 25), ("D", 6, 36), ("D", 8, 64),
    ("E", 6, 42), ("E", 7, 70), ("E", 8, 128),
])
def test_indecomposable_count(family, rank, count):
    t0 = time.perf_counter()
    c = cold_category(family, rank)
    got = len(c.labels)
    elapsed = time.perf_counter() - t0
    assert got == count
    # oracle: root closure plus one shifted projective per vertex
    assert len(positive_roots(c.quiver)) + rank == count
    assert elapsed < 1.0


# -- 2 ----------------------------------------------------------------------

def _orbit_len(c, x):
    return len(c.orbit_of(x))


@criterion(2, "tau_c orbit structure")
def test_orbits_a3():
    t0 = time.perf_counter()
    c = cold_category("A", 3)
    assert sorted(len(o) for o in c.orbits) == [3, 6]
    assert time.perf_counter() - t0 < 1.0


@criterion(2, "tau_c orbit structure")
def test_orbits_e7():
    t0 = time.perf_counter()
    c = cold_category("E", 7)
    assert [len(o) for o in c.orbits] == [10] * 7
    assert time.perf_counter() - t0 < 1.0


@criterion(2, "tau_c orbit structure")
@pytest.mark.parametrize("rank", [4, 5, 6, 7, 8])
def test_orbits_d(rank):
    t0 = time.perf_counter()
    c = cold_category("D", rank)
    q = c.quiver
    short = [a for a in leaves(q) if arm_distance(q, a) == 2 and (rank == 4 or a != rank)]
    if rank % 2 == 1:
        # the two short-arm leaves share one orbit of length 2n
        assert _orbit_len(c, ShiftedProj(1)) == 2 * rank
        assert ShiftedProj(2) in c.orbit_of(ShiftedProj(1))
    else:
        orbs = {tuple(c.orbit_of(ShiftedProj(a))) for a in short}
        assert len(orbs) == len(short) == (3 if rank == 4 else 2)
        assert all(len(o) == rank for o in orbs)
    if rank > 4:
        assert _orbit_len(c, ShiftedProj(rank)) == rank
    assert time.perf_counter() - t0 < 1.0


# -- 3 ----------------------------------------------------------------------

def _entry(c, a, t):
    seq = c.hammock_sequence(a)
    return seq[t] if t < len(seq) else None


def _nonzero_noninjective(e):
    return e is not None and e[1] >= 1 and not e[2]


_timer = {"total": 0.0}


@criterion(3, "exclusion Hom facts from hammocks")
@pytest.mark.parametrize("rank", [4, 5, 6, 7, 8])
def test_exclusion_interior_a(rank):
    # over A_n some orientation has a non-injective tau^{-1}P(a) with a map into it;
    # the cluster category does not depend on the orientation
    t0 = time.perf_counter()
    q0 = build_dynkin("A", rank)
    for a in interior_vertices(q0):
        witness = next((o for o in all_orientations(q0.dynkin)
                        if _nonzero_noninjective(_entry(cluster_category(o), a, 1))), None)
        assert witness is not None, f"A{rank} vertex {a}"
        c = cluster_category(q0)
        x = Module(c.cat.projectives[a])
        assert c.hom_c_dim(x, c.tau_inv(x)) >= 1
    _timer["total"] += time.perf_counter() - t0


@criterion(3, "exclusion Hom facts from hammocks")
@pytest.mark.parametrize("family,rank", [("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8),
                                         ("E", 6), ("E", 7), ("E", 8)])
def test_exclusion_interior_de(family, rank):
    t0 = time.perf_counter()
    c = cluster_category(build_dynkin(family, rank))
    for a in interior_vertices(c.quiver):
        assert _nonzero_noninjective(_entry(c, a, 1)), f"{family}{rank} vertex {a}"
    _timer["total"] += time.perf_counter() - t0


@criterion(3, "exclusion Hom facts from hammocks")
@pytest.mark.parametrize("rank", [6, 7, 8])
def test_exclusion_e_leaf_p2(rank):
    t0 = time.perf_counter()
    c = cluster_category(build_dynkin("E", rank))
    q = c.quiver
    p2 = [a for a in leaves(q) if arm_distance(q, a) == 2]
    assert p2
    for a in p2:
        e = _entry(c, a, 3)
        assert e is not None and e[1] >= 1
    _timer["total"] += time.perf_counter() - t0


@criterion(3, "exclusion Hom facts from hammocks")
@pytest.mark.parametrize("family,rank", [("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8),
                                         ("E", 6), ("E", 7), ("E", 8)])
def test_exclusion_leaf_at_p(family, rank):
    t0 = time.perf_counter()
    c = cluster_category(build_dynkin(family, rank))
    q = c.quiver
    for a in leaves(q):
        p = arm_distance(q, a)
        e = _entry(c, a, p)
        assert e is not None and e[1] >= 1, f"{family}{rank} leaf {a} t={p}"
    _timer["total"] += time.perf_counter() - t0


@criterion(3, "exclusion Hom facts from hammocks")
def test_exclusion_total_runtime():
    assert _timer["total"] < 5.0


# -- 4 ----------------------------------------------------------------------

@criterion(4, "cluster-tilting counts")
@pytest.mark.parametrize("family,rank,count", [
    ("A", 2, 5), ("A", 3, 14), ("D", 4, 50), ("D", 5, 182), ("D", 6, 672),
    ("E", 6, 833), ("E", 7, 4160), ("E", 8, 25080),
])
def test_tilting_count(family, rank, count):
    c = cluster_category(build_dynkin(family, rank))
    t0 = time.perf_counter()
    ts = enumerate_cluster_tilting(c)
    elapsed = time.perf_counter() - t0
    assert len(ts) == count
    assert len(set(map(tuple, ts))) == count
    assert all(len(t) == rank for t in ts)
    assert elapsed < 120.0


# -- 5 ----------------------------------------------------------------------

@criterion(5, "classification at desk scale")
@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8)])
def test_classification_nakayama(family, rank):
    rep, elapsed = report(family, rank)
    naka = [f for f in rep["finalists"] if f["family"] == "NakayamaCycle"]
    assert naka
    for f in naka:
        assert f["algebra"]["kupisch_series"] == [rank - 1] * rank
        assert f["template"] == f"NakayamaCycle({rank},{rank - 1})"
    assert set(rep["families"]) <= {"NakayamaCycle", "BiserialD2m"}
    assert all(f["family"] in {"NakayamaCycle", "BiserialD2m"} for f in rep["finalists"])
    assert elapsed < 600


@criterion(5, "classification at desk scale")
@pytest.mark.parametrize("rank", [6, 8])
def test_classification_biserial(rank):
    rep, _ = report("D", rank)
    assert rep["families"] == ["BiserialD2m", "NakayamaCycle"]
    bis = [f for f in rep["finalists"] if f["family"] == "BiserialD2m"]
    assert bis
    for f in bis:
        assert f["template"] == f"BiserialD2m({rank // 2})"
        assert len(f["algebra"]["matches"]) == 1


@criterion(5, "classification at desk scale")
@pytest.mark.parametrize("rank", [4, 5, 7])
def test_classification_no_biserial_odd(rank):
    rep, _ = report("D", rank)
    assert rep["families"] == ["NakayamaCycle"]


@criterion(5, "classification at desk scale")
@pytest.mark.parametrize("rank", [6, 7, 8])
def test_classification_e_empty(rank):
    rep, _ = report("E", rank)
    assert rep["counts"]["finalists"] == 0
    assert rep["finalists"] == [] and rep["families"] == []


# -- 6 ----------------------------------------------------------------------

@criterion(6, "self-injective iff tau_c^2 T = T")
@pytest.mark.parametrize("family,rank,sample", [
    ("A", 3, None), ("A", 4, None), ("D", 4, None), ("D", 5, None),
    ("D", 6, 100), ("D", 7, 100), ("D", 8, 100), ("E", 6, 100),
])
def test_criterion_equivalence(family, rank, sample):
    c = cluster_category(build_dynkin(family, rank))
    ts = enumerate_cluster_tilting(c)
    checked, bad = criterion_mismatches(c, ts, sample)
    assert checked == (len(ts) if sample is None else sample)
    assert bad == 0


@criterion(6, "self-injective iff tau_c^2 T = T")
def test_criterion_equivalence_includes_both_sides():
    # the exhaustive part must actually exercise both truth values
    c = cluster_category(build_dynkin("D", 4))
    ts = enumerate_cluster_tilting(c)
    stable = [t for t in ts if is_tau2_stable(c, t)]
    assert 0 < len(stable) < len(ts)
    assert all(is_self_injective_algebra(end_algebra(c, t).algebra) for t in stable)


# -- 7 ----------------------------------------------------------------------

@criterion(7, "Nakayama permutation orbits of serial finalists")
@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8)])
def test_nakayama_orbits(family, rank):
    rep, _ = report(family, rank)
    serial = [f for f in rep["finalists"] if f["family"] == "NakayamaCycle"]
    assert serial
    for f in serial:
        nu = f["algebra"]["nakayama_permutation"]
        assert len(permutation_cycles(nu)) == (2 if rank % 2 == 0 else 1)


# -- 8 ----------------------------------------------------------------------

@criterion(8, "special biserial finalists and template dimensions")
@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8)])
def test_finalists_structure(family, rank):
    c = cluster_category(build_dynkin(family, rank))
    for t in selfinjective_candidates(c):
        alg = end_algebra(c, t).algebra
        assert is_special_biserial(alg)
        assert is_self_injective_algebra(alg)
        if alg.dim == rank * (rank - 1):
            assert template_dimension(nakayama_template(rank, rank - 1)) == alg.dim
        else:
            m = rank // 2
            assert rank % 2 == 0 and alg.dim == m * m + 4 * m
            assert template_dimension(biserial_template(m)) == alg.dim


@criterion(8, "special biserial finalists and template dimensions")
@pytest.mark.parametrize("n", range(2, 9))
def test_template_path_counts(n):
    assert template_dimension(nakayama_template(n, n - 1)) == n * (n - 1)
    assert template_dimension(biserial_template(n)) == n * n + 4 * n


# -- 9 ----------------------------------------------------------------------

@criterion(9, "trivial-extension cross-check")
@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8)])
def test_trivial_extension(family, rank):
    rep, _ = report(family, rank)
    assert rep["finalists"]
    for f in rep["finalists"]:
        tr = f["trivial_extension"]
        assert tr["dim_gamma"] == tr["dim_tilted"] + tr["ext2_total"]
        assert tr["cartan_ok"]
        assert all(obj.startswith("M(") for obj in f["normalized"]["objects"])


# -- 10 ---------------------------------------------------------------------

SMALL = [("A", r) for r in range(1, 7)] + [("D", r) for r in (4, 5, 6)] + [("E", 6)]
DESK = [("A", r) for r in range(1, 9)] + [("D", r) for r in range(4, 10)] + [("E", r) for r in (6, 7, 8)]


@criterion(10, "oracle equivalence and Ext symmetry")
@pytest.mark.parametrize("family,rank", SMALL)
def test_reversed_orientation_oracle(family, rank):
    c = cluster_category(build_dynkin(family, rank))
    assert opposite_mismatches(c) == (0, 0)


@criterion(10, "oracle equivalence and Ext symmetry")
@pytest.mark.parametrize("family,rank", DESK)
def test_ext_symmetric(family, rank):
    e = cluster_category(build_dynkin(family, rank)).ext_table
    n = len(e)
    assert sum(e[i][j] != e[j][i] for i in range(n) for j in range(n)) == 0


# -- 11 ---------------------------------------------------------------------

def _check_layout(c, data):
    """Slice/row layout: every row is one Dynkin vertex, degrees follow the diagram."""
    q = c.quiver
    rows = Counter(v["row"] for v in data["vertices"])
    assert set(rows) == set(q.vertices)
    indeg = Counter(a["target"] for a in data["arrows"])
    outdeg = Counter(a["source"] for a in data["arrows"])
    for v in data["vertices"]:
        val = len(q.neighbors(v["row"]))
        assert indeg[v["label"]] == outdeg[v["label"]] == val
    return rows


@criterion(11, "AR quiver figures")
def test_figure_a3():
    c = cluster_category(build_dynkin("A", 3))
    for t in selfinjective_candidates(c):
        data = quiver_data(c, "cluster", t)
        counts = dot_counts(to_dot(data))
        assert counts == {"vertices": 9, "arrows": 12, "stars": 3}
        _check_layout(c, data)


@criterion(11, "AR quiver figures")
@pytest.mark.parametrize("rank,count", [(7, 39), (8, 64)])
def test_figure_d(rank, count):
    c = cluster_category(build_dynkin("D", rank))
    data = quiver_data(c)
    rows = _check_layout(c, data)
    # D_n: n rows of n vertices each
    assert set(rows.values()) == {rank}
    assert dot_counts(to_dot(data))["vertices"] == count


@criterion(11, "AR quiver figures")
@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 6), ("D", 7), ("D", 8), ("E", 6)])
def test_figure_mod_gamma(family, rank):
    c = cluster_category(build_dynkin(family, rank))
    full = dot_counts(to_dot(quiver_data(c)))
    ts = selfinjective_candidates(c) or enumerate_cluster_tilting(c)[:3]
    for t in ts:
        data = quiver_data(c, "mod-gamma", t)
        counts = dot_counts(to_dot(data))
        assert full["vertices"] - counts["vertices"] == rank
        assert len(data["removed"]) == rank
        assert counts["stars"] == rank


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
