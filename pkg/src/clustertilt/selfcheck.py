"""Invariant suites behind ``ctl selfcheck``.

Each check returns a short detail string and raises nothing; failures are
collected so one run reports everything it found.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .algebra import injectives_are_projective, is_self_injective_algebra, is_special_biserial
from .cluster import ClusterCategory, cluster_category, reflect_label
from .dynkin import DynkinType, build_dynkin, coxeter_order, euler_form, positive_roots
from .endalg import end_algebra
from .reps import check_catalogue
from .tilting import enumerate_cluster_tilting, expected_count, is_tau2_stable, selfinjective_candidates

FAST = [("A", 2), ("A", 3), ("A", 4), ("D", 4)]
FULL = FAST + [("D", 5), ("D", 6), ("D", 7), ("D", 8), ("E", 6), ("E", 7), ("E", 8)]
EXHAUSTIVE = {("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5)}
SAMPLE = 20
SEED = 20240607


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def opposite_mismatches(c: ClusterCategory) -> tuple[int, int]:
    """Hom/Ext disagreements with the opposite orientation, relabeled by dimension vector.

    Vector-space duality is contravariant, so Hom is compared with the
    transposed table of the opposite quiver; Ext is symmetric either way.
    """
    d = cluster_category(c.quiver.opposite())
    hom_bad = ext_bad = 0
    for x in c.labels:
        for y in c.labels:
            if c.hom_c_dim(x, y) != d.hom_c_dim(y, x):
                hom_bad += 1
            if c.ext_c_dim(x, y) != d.ext_c_dim(x, y):
                ext_bad += 1
    return hom_bad, ext_bad


def reflection_mismatches(c: ClusterCategory) -> int:
    """Hom disagreements after transporting labels along every sink reflection."""
    bad = 0
    q = c.quiver
    for v in q.vertices:
        if not q.is_sink(v):
            continue
        d = cluster_category(q.reflect(v))
        img = {x: reflect_label(q, v, x) for x in c.labels}
        for x in c.labels:
            for y in c.labels:
                if c.hom_c_dim(x, y) != d.hom_c_dim(img[x], img[y]):
                    bad += 1
    return bad


def criterion_mismatches(c: ClusterCategory, tiltings, sample: int | None, seed: int = SEED) -> tuple[int, int]:
    """``(checked, mismatches)`` for: End_C(T) self-injective iff tau_c^2 T = T.

    A mismatch is also counted when the two self-injectivity tests disagree.
    """
    ts = list(tiltings)
    if sample is not None and sample < len(ts):
        ts = random.Random(seed).sample(ts, sample)
    bad = 0
    for t in ts:
        alg = end_algebra(c, t).algebra
        a, b = is_self_injective_algebra(alg), injectives_are_projective(alg)
        bad += a != b or a != is_tau2_stable(c, t)
    return len(ts), bad


def tamper_detected() -> bool:
    """Changing one structure constant of a finalist algebra breaks associativity."""
    c = cluster_category(build_dynkin("A", 3))
    alg = end_algebra(c, selfinjective_candidates(c)[0]).algebra
    if alg.check_associativity():
        return False
    key = next(k for k in sorted(alg.products) if alg.basis[k[0]].degree == 1 or alg.basis[k[1]].degree == 1)
    prod = dict(alg.products[key])
    c0 = next(iter(sorted(prod)))
    prod[c0] = prod[c0] + 1
    alg.products[key] = prod
    return bool(alg.check_associativity())


def _type_checks(family: str, rank: int) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    t = DynkinType(family, rank)
    q = build_dynkin(t)
    c = cluster_category(q)
    tag = f"{family}{rank}"
    state: dict = {}

    def roots():
        got = len(positive_roots(q))
        return got == t.root_count, f"{got} roots"

    def coxeter():
        h = coxeter_order(q)
        return h == t.coxeter_number, f"order {h}"

    def catalogue_ok():
        check_catalogue(q)
        cat = c.cat
        bad = sum(cat.hom(d, e) - cat.ext(d, e) != euler_form(q, d, e) for d in cat.order for e in cat.order)
        return bad == 0, f"{bad} Euler-form mismatches"

    def tables():
        h, e = c.hom_table, c.ext_table
        n = len(h)
        sym = all(e[i][j] == e[j][i] for i in range(n) for j in range(n))
        diag = all(h[i][i] == 1 and e[i][i] == 0 for i in range(n))
        return sym and diag, "symmetric Ext, unit diagonals" if sym and diag else "table defect"

    def mesh():
        qv = c.ar_quiver
        ok = qv.check_mesh() and all(c.hom_c_dim(a, b) >= 1 for a, b in qv.arrows)
        return ok, f"{len(qv.arrows)} arrows"

    def orientation():
        hb, eb = opposite_mismatches(c)
        rb = reflection_mismatches(c)
        return hb == eb == rb == 0, f"duality {hb}/{eb}, reflection {rb}"

    def tilting():
        ts = state["tiltings"] = enumerate_cluster_tilting(c)
        want = expected_count(family, rank)
        return len(ts) == want, f"{len(ts)} objects"

    def criterion():
        ts = state.get("tiltings") or enumerate_cluster_tilting(c)
        sample = None if (family, rank) in EXHAUSTIVE else SAMPLE
        n, bad = criterion_mismatches(c, ts, sample)
        return bad == 0, f"{n} checked, {bad} mismatches"

    def candidates():
        cands = selfinjective_candidates(c, state.get("tiltings"))
        algs = [end_algebra(c, x).algebra for x in cands]
        ok = all(not a.check_associativity() and is_special_biserial(a) and is_self_injective_algebra(a)
                 for a in algs)
        return ok, f"{len(cands)} candidates"

    checks = [("roots", roots), ("coxeter-order", coxeter), ("catalogue", catalogue_ok),
              ("cluster-tables", tables), ("mesh", mesh)]
    if rank <= 6:
        checks.append(("orientation", orientation))
    checks += [("tilting-count", tilting), ("criterion", criterion), ("candidates", candidates)]
    return [(f"{name} {tag}", fn) for name, fn in checks]


def run(scope: str = "fast", emit: Callable[[str], None] | None = None) -> list[CheckResult]:
    types = FAST if scope == "fast" else FULL
    out: list[CheckResult] = []

    def record(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        r = CheckResult(name, ok, detail)
        out.append(r)
        if emit:
            emit(r.line())

    for family, rank in types:
        for name, fn in _type_checks(family, rank):
            record(name, fn)
    record("tamper-detection", lambda: (tamper_detected(), "one altered constant"))
    return out
