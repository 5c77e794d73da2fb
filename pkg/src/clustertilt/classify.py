"""Classification pipeline: from a Dynkin quiver to the self-injective cluster-tilted algebras.

``classify`` enumerates cluster-tilting objects, keeps those fixed by
``tau_c^2``, builds each endomorphism algebra and identifies it with one of
the two presentation families.  Reports are plain dictionaries with a
schema version; JSON dumps are byte-stable.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .algebra import (BasicAlgebra, biserial_template, injectives_are_projective, is_self_injective_algebra,
                      is_special_biserial, kupisch_series, loewy_exponent, matches_presentation, nakayama_permutation,
                      nakayama_template, permutation_cycles, template_dimension)
from .cluster import ClusterCategory, cluster_category, parse_label
from .dynkin import DynkinType, QuiverSpec, build_dynkin
from .endalg import build_end_algebra, normalize_to_modules, trivial_extension_check
from .tilting import enumerate_cluster_tilting, selfinjective_candidates

SCHEMA_VERSION = 1
RANK_CEILING = {"A": 8, "D": 9, "E": 8}


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; always a bug."""


def check_supported(family: str, rank: int) -> DynkinType:
    t = DynkinType(family, rank)
    if rank > RANK_CEILING[family]:
        raise ValueError(f"rank {rank} exceeds the desk-scale ceiling {RANK_CEILING[family]} for type {family}")
    return t


def family_templates(alg: BasicAlgebra) -> list:
    """Templates worth trying for ``alg``."""
    out = []
    ks = kupisch_series(alg)
    if ks is not None and len(set(ks)) == 1:
        out.append(nakayama_template(alg.n, ks[0]))
    if alg.n % 2 == 0 and alg.n >= 4:
        out.append(biserial_template(alg.n // 2))
    return out


def algebra_report(alg: BasicAlgebra) -> dict:
    selfinj = is_self_injective_algebra(alg)
    if selfinj != injectives_are_projective(alg):
        raise ConsistencyError("the two self-injectivity tests disagree")
    nu = nakayama_permutation(alg)
    ks = kupisch_series(alg)
    matches = []
    for tmpl in family_templates(alg):
        m = matches_presentation(alg, tmpl)
        if m.matched:
            matches.append({"family": tmpl.family, "template": tmpl.key,
                            "template_dimension": template_dimension(tmpl),
                            "scalars": [str(s) for s in m.scalars],
                            "vertex_map": m.vertex_map})
    exp = loewy_exponent(alg)
    return {
        "dimension": alg.dim,
        "cartan": alg.cartan,
        "quiver": {"vertices": list(range(alg.n)), "arrows": [list(a) for a in alg.gabriel_quiver()]},
        "self_injective": selfinj,
        "nakayama_permutation": nu,
        "nakayama_cycle_type": sorted((len(c) for c in permutation_cycles(nu)), reverse=True) if nu else None,
        "kupisch_series": ks,
        "radical_nilpotency": exp,
        "special_biserial": is_special_biserial(alg),
        "associative": not alg.check_associativity(),
        "matches": matches,
    }


def _finalist(args) -> dict:
    q, labels = args
    c = cluster_category(q)
    t = tuple(parse_label(x) for x in labels)
    norm = normalize_to_modules(c, t)
    data = build_end_algebra(norm.category, norm.objects)
    rep = algebra_report(data.algebra)
    triv = trivial_extension_check(c, t)
    families = sorted({m["family"] for m in rep["matches"]})
    return {
        "tilting": list(labels),
        "normalized": {"orientation": norm.quiver.orientation_key, "tau_power": norm.shift,
                       "sink_reflections": norm.sinks, "objects": [str(x) for x in norm.objects]},
        "algebra": rep,
        "trivial_extension": triv.as_dict(),
        "family": families[0] if len(families) == 1 else None,
        "template": rep["matches"][0]["template"] if len(rep["matches"]) == 1 else None,
    }


def classify(q: QuiverSpec, jobs: int = 1) -> dict:
    c = cluster_category(q)
    tiltings = enumerate_cluster_tilting(c)
    cands = selfinjective_candidates(c, tiltings)
    work = [(q, [str(x) for x in t]) for t in cands]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_finalist, work))
    else:
        results = [_finalist(w) for w in work]
    finalists = [r for r in results if r["algebra"]["self_injective"]]
    rejected = [r["tilting"] for r in results if not r["algebra"]["self_injective"]]
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "type": q.dynkin.family,
        "rank": q.n,
        "orientation": q.orientation_key,
        "counts": {
            "indecomposables": len(c),
            "orbit_lengths": [len(o) for o in c.orbits],
            "cluster_tilting": len(tiltings),
            "tau2_fixed_candidates": len(cands),
            "finalists": len(finalists),
        },
        "twisted": c.twisted,
        "families": sorted({f["family"] for f in finalists if f["family"]}),
        "finalists": finalists,
        "rejected_candidates": rejected,
    }
    validate_report(report)
    return report


def validate_report(report: dict) -> None:
    """Raise ConsistencyError when a report breaks its invariants."""
    problems = []
    if report["rejected_candidates"]:
        problems.append("a tau_c^2-fixed candidate has a non-self-injective algebra")
    for f in report["finalists"]:
        alg = f["algebra"]
        if not alg["self_injective"]:
            problems.append(f"finalist {f['tilting']} is not self-injective")
        if len(alg["matches"]) != 1:
            problems.append(f"finalist {f['tilting']} matches {len(alg['matches'])} families")
        if not alg["associative"]:
            problems.append(f"finalist {f['tilting']} is not associative")
        if not f["trivial_extension"]["ok"]:
            problems.append(f"finalist {f['tilting']} fails the trivial-extension check")
    if problems:
        raise ConsistencyError("; ".join(problems))


def orbit_table(c: ClusterCategory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": c.quiver.dynkin.family,
        "rank": c.n,
        "orientation": c.quiver.orientation_key,
        "twisted": c.twisted,
        "orbits": [{"representative": str(o[0]), "length": len(o), "members": [str(x) for x in o]}
                   for o in c.orbits],
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_text(report: dict) -> str:
    cnt = report["counts"]
    lines = [
        f"type {report['type']}{report['rank']}  orientation {report['orientation']}",
        f"indecomposables of C(H): {cnt['indecomposables']}",
        f"tau_c orbit lengths: {cnt['orbit_lengths']}" + ("  (twisted)" if report["twisted"] else ""),
        f"cluster-tilting objects: {cnt['cluster_tilting']}",
        f"tau_c^2-fixed candidates: {cnt['tau2_fixed_candidates']}",
        f"self-injective finalists: {cnt['finalists']}",
    ]
    for f in report["finalists"]:
        alg = f["algebra"]
        lines.append(f"  T = {{{', '.join(f['tilting'])}}}")
        lines.append(f"    family {f['template']}, dim {alg['dimension']}, "
                     f"nu cycles {alg['nakayama_cycle_type']}, rad^{alg['radical_nilpotency']} = 0")
        if alg["kupisch_series"]:
            lines.append(f"    Kupisch series {tuple(alg['kupisch_series'])}")
        m = alg["matches"][0] if alg["matches"] else None
        if m and m["scalars"]:
            lines.append(f"    relation scalars {m['scalars']}")
    return "\n".join(lines) + "\n"


def quiver_for(family: str, rank: int, orientation: str | None = None) -> QuiverSpec:
    check_supported(family, rank)
    return build_dynkin(family, rank, orientation or "default")
