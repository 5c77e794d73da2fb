import json

import jsonschema
import pytest

from clustertilt.algebra import nakayama_cycle_algebra, path_algebra_monomial
from clustertilt.classify import (ConsistencyError, algebra_report, check_supported, classify, orbit_table,
                                  quiver_for, report_json, report_text, validate_report)
from clustertilt.cluster import cluster_category
from clustertilt.dynkin import build_dynkin
from clustertilt.schemas import ORBITS, REPORT

_reports = {}


def report(family, rank, orientation=None):
    key = (family, rank, orientation)
    if key not in _reports:
        _reports[key] = classify(quiver_for(family, rank, orientation))
    return _reports[key]


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 3), ("D", 4), ("D", 6), ("D", 7), ("E", 6)])
def test_report_schema(family, rank):
    rep = report(family, rank)
    jsonschema.validate(rep, REPORT)
    validate_report(rep)
    assert rep["counts"]["finalists"] == len(rep["finalists"])
    assert rep["counts"]["tau2_fixed_candidates"] == len(rep["finalists"]) + len(rep["rejected_candidates"])


def test_d7_is_nakayama_only():
    assert report("D", 7)["families"] == ["NakayamaCycle"]


def test_d6_has_both_families():
    rep = report("D", 6)
    assert rep["families"] == ["BiserialD2m", "NakayamaCycle"]
    assert {f["template"] for f in rep["finalists"]} == {"NakayamaCycle(6,5)", "BiserialD2m(3)"}


def test_e6_has_no_finalists():
    rep = report("E", 6)
    assert rep["finalists"] == [] and rep["families"] == []


def test_a1_degenerate():
    rep = report("A", 1)
    assert [f["template"] for f in rep["finalists"]] == ["NakayamaCycle(1,1)"] * 2


def test_orientation_does_not_change_the_answer():
    a, b = report("A", 4), report("A", 4, "+-+")
    assert a["counts"] == b["counts"]
    assert a["families"] == b["families"]


def test_json_deterministic():
    q = quiver_for("D", 5)
    assert report_json(classify(q)) == report_json(classify(q))
    assert json.loads(report_json(report("D", 5))) == report("D", 5)


def test_parallel_matches_serial():
    q = quiver_for("D", 5)
    assert report_json(classify(q, jobs=2)) == report_json(report("D", 5))


def test_text_report():
    text = report_text(report("A", 3))
    assert "indecomposables of C(H): 9" in text
    assert "NakayamaCycle(3,2)" in text


def test_orbit_table():
    table = orbit_table(cluster_category(build_dynkin("A", 3)))
    jsonschema.validate(table, ORBITS)
    assert [o["length"] for o in table["orbits"]] == [6, 3]
    # unequal orbit lengths
    assert table["twisted"] is True


def test_validate_report_catches_problems():
    rep = json.loads(report_json(report("D", 4)))
    rep["finalists"][0]["trivial_extension"]["ok"] = False
    with pytest.raises(ConsistencyError):
        validate_report(rep)
    rep = json.loads(report_json(report("D", 4)))
    rep["rejected_candidates"].append(rep["finalists"][0]["tilting"])
    with pytest.raises(ConsistencyError):
        validate_report(rep)


def test_algebra_report_fields():
    rep = algebra_report(nakayama_cycle_algebra(4, 3))
    assert rep["self_injective"] and rep["nakayama_cycle_type"] == [2, 2]
    assert [m["template"] for m in rep["matches"]] == ["NakayamaCycle(4,3)"]
    rep = algebra_report(path_algebra_monomial(2, [(0, 1)]))
    assert not rep["self_injective"] and rep["nakayama_permutation"] is None


@pytest.mark.parametrize("family,rank", [("A", 9), ("D", 10), ("E", 9), ("D", 2), ("B", 3)])
def test_unsupported(family, rank):
    with pytest.raises(Exception):
        check_supported(family, rank)
