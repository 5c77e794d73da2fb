import json
import os
import subprocess
import sys

import jsonschema
import pytest

from clustertilt.cache import output_key
from clustertilt.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, UsageError, main, parse_mark
from clustertilt.figures import dot_counts
from clustertilt.schemas import ORBITS, QUIVER, REPORT, TILTING_LINE


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CTL_CACHE_DIR", str(d))
    return d


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys, cache_dir):
    code, out, _ = run(capsys, "classify", "--type", "D", "--rank", "4")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT)
    assert rep["families"] == ["NakayamaCycle"]


def test_classify_text_times_on_stderr(capsys, cache_dir):
    code, out, err = run(capsys, "classify", "--type", "A", "--rank", "3", "--format", "text")
    assert code == EXIT_OK
    assert "elapsed" in err and "elapsed" not in out


def test_cache_hit_is_identical(capsys, cache_dir):
    argv = ("classify", "--type", "D", "--rank", "5")
    _, first, _ = run(capsys, *argv)
    assert list(cache_dir.glob("classify-D5-*.out"))
    _, second, _ = run(capsys, *argv)
    _, fresh, _ = run(capsys, *argv, "--no-cache")
    assert first == second == fresh


def test_check_cache_passes_then_catches_tampering(capsys, cache_dir):
    argv = ("classify", "--type", "A", "--rank", "3")
    assert run(capsys, *argv)[0] == EXIT_OK
    assert run(capsys, *argv, "--check-cache")[0] == EXIT_OK
    path = cache_dir / f"{output_key('classify', 'A', 3, 'default', 'json')}.out"
    path.write_text(path.read_text().replace('"dimension": 6', '"dimension": 7'))
    code, _, err = run(capsys, *argv, "--check-cache")
    assert code == EXIT_INTERNAL
    assert "cached output differs" in err
    # a plain run trusts the cache
    assert '"dimension": 7' in run(capsys, *argv)[1]


def test_no_cache_writes_nothing(capsys, cache_dir):
    run(capsys, "classify", "--type", "A", "--rank", "2", "--no-cache")
    assert not cache_dir.exists() or not list(cache_dir.iterdir())


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--type", "A", "--rank", "3")
    assert code == EXIT_OK and "lengths [6, 3]" in out
    _, out, _ = run(capsys, "orbits", "--type", "E", "--rank", "7", "--format", "json")
    table = json.loads(out)
    jsonschema.validate(table, ORBITS)
    assert [o["length"] for o in table["orbits"]] == [10] * 7


def test_ar_quiver_dot(capsys):
    code, out, _ = run(capsys, "ar-quiver", "--type", "A", "--rank", "3", "--mark", "M(1,0,0),M(1,1,1),P2[1]")
    assert code == EXIT_OK
    assert dot_counts(out) == {"vertices": 9, "arrows": 12, "stars": 3}


def test_ar_quiver_mod_gamma_json(capsys):
    _, out, _ = run(capsys, "tilting", "--type", "A", "--rank", "3")
    tiltings = [json.loads(line) for line in out.splitlines()]
    for t in tiltings:
        jsonschema.validate(t, TILTING_LINE)
    assert len(tiltings) == 14
    ok = 0
    for t in tiltings:
        code, out, _ = run(capsys, "ar-quiver", "--type", "A", "--rank", "3", "--mode", "mod-gamma",
                           "--format", "json", "--mark", ",".join(t))
        assert code == EXIT_OK
        data = json.loads(out)
        jsonschema.validate(data, QUIVER)
        assert len(data["vertices"]) == 6
        ok += data["marked_tau2_stable"]
    assert ok == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "a4.dot"
    code, out, _ = run(capsys, "ar-quiver", "--type", "A", "--rank", "4", "-o", str(path))
    assert code == EXIT_OK and out == ""
    assert dot_counts(path.read_text())["vertices"] == 14


def test_catalogue_dump(capsys, cache_dir):
    code, out, _ = run(capsys, "catalogue", "--type", "D", "--rank", "4")
    assert code == EXIT_OK
    assert out.startswith("CTL-CATALOGUE 1\n")
    assert "indecomposables 12" in out


@pytest.mark.parametrize("argv", [
    ["classify", "--type", "B", "--rank", "3"],
    ["classify", "--type", "E", "--rank", "5"],
    ["classify", "--type", "A", "--rank", "12"],
    ["classify", "--type", "A", "--rank", "3", "--orientation", "+x"],
    ["classify", "--type", "A", "--rank", "3", "--jobs", "0"],
    ["ar-quiver", "--type", "A", "--rank", "3", "--mark", "M(1,1"],
    ["ar-quiver", "--type", "A", "--rank", "3", "--mark", "M(1,0,1)"],
    ["ar-quiver", "--type", "A", "--rank", "3", "--mode", "mod-gamma", "--mark", "P1[1]"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_parse_mark():
    assert [str(x) for x in parse_mark("M(1, 0,0); P2[1] M(0,1,1)")] == ["M(1,0,0)", "P2[1]", "M(0,1,1)"]
    assert parse_mark(None) == []
    with pytest.raises(UsageError):
        parse_mark("M(1,0,0), Q")


def test_selfcheck_fast(capsys):
    code, out, _ = run(capsys, "selfcheck")
    assert code == EXIT_OK
    assert out.rstrip().endswith("checks passed")
    assert "FAIL" not in out


def test_module_entry_point(tmp_path):
    env = {**os.environ, "CTL_CACHE_DIR": str(tmp_path)}
    proc = subprocess.run([sys.executable, "-m", "clustertilt", "orbits", "--type", "D", "--rank", "4"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert "lengths [4, 4, 4, 4]" in proc.stdout


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("ctl ")
