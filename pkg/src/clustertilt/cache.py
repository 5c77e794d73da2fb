"""On-disk caches.

Two things are cached:

* the indecomposable catalogue of one oriented quiver, with its Hom/Ext
  tables, in a line-oriented text format (header, then integer matrices);
* finished CLI outputs, keyed by (command, type, rank, orientation, version).

Both are deterministic functions of their key, so a cache hit must be
byte-identical to a fresh computation; ``--check-cache`` verifies that.
"""
from __future__ import annotations

import hashlib
import os
from fractions import Fraction
from pathlib import Path

from . import __version__
from .dynkin import DynkinType, QuiverSpec, build_dynkin
from .reps import Catalogue, Representation, catalogue

FORMAT_VERSION = 1
MAGIC = "CTL-CATALOGUE"


class CacheError(ValueError):
    pass


def cache_dir() -> Path:
    env = os.environ.get("CTL_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "clustertilt"


def orientation_hash(q: QuiverSpec) -> str:
    text = ";".join(f"{s}>{t}" for s, t in q.arrows)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _int(v) -> int:
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise CacheError("non-integral matrix entry")
        return v.numerator
    return int(v)


def dump_catalogue(q: QuiverSpec) -> str:
    cat = catalogue(q)
    t = q.dynkin
    lines = [
        f"{MAGIC} {FORMAT_VERSION}",
        f"type {t.family} rank {t.rank} orientation {q.orientation_key or '.'} hash {orientation_hash(q)}",
        f"indecomposables {len(cat)}",
    ]
    for d in cat.order:
        x = cat[d]
        lines.append("rep " + " ".join(map(str, d)))
        for a in q.arrows:
            m = x.maps[a]
            rows, cols = x.dim(a[1]), x.dim(a[0])
            lines.append(f"map {a[0]} {a[1]} {rows} {cols}")
            for row in m:
                lines.append(" ".join(str(_int(v)) for v in row))
    n = len(cat.order)
    for name, pick in (("hom", 0), ("ext", 1)):
        lines.append(f"table {name} {n} {n}")
        for d in cat.order:
            lines.append(" ".join(str(cat.hom_ext(d, e)[pick]) for e in cat.order))
    return "\n".join(lines) + "\n"


def load_catalogue(text: str, q: QuiverSpec | None = None) -> dict:
    """Parse a dump; returns ``{"quiver", "reps", "hom", "ext"}``.

    When ``q`` is given the header must match it.
    """
    it = iter(text.splitlines())
    head = next(it).split()
    if head != [MAGIC, str(FORMAT_VERSION)]:
        raise CacheError("not a catalogue cache of this format version")
    meta = next(it).split()
    family, rank, okey, h = meta[1], int(meta[3]), meta[5], meta[7]
    quiver = build_dynkin(DynkinType(family, rank), orientation=("" if okey == "." else okey) or "default")
    if orientation_hash(quiver) != h:
        raise CacheError("orientation hash mismatch")
    if q is not None and q != quiver:
        raise CacheError("cache belongs to a different quiver")
    count = int(next(it).split()[1])
    reps = {}
    for _ in range(count):
        dims = tuple(int(v) for v in next(it).split()[1:])
        maps = {}
        for _a in quiver.arrows:
            _, s, t, r, _c = next(it).split()
            maps[(int(s), int(t))] = [[int(v) for v in next(it).split()] for _ in range(int(r))]
        reps[dims] = Representation(quiver, dims, maps)
    tables = {}
    for _ in range(2):
        _, name, r, _c = next(it).split()
        tables[name] = [[int(v) for v in next(it).split()] for _ in range(int(r))]
    return {"quiver": quiver, "reps": reps, "hom": tables["hom"], "ext": tables["ext"]}


def write_catalogue_cache(q: QuiverSpec, directory: Path | None = None) -> Path:
    d = directory or cache_dir()
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"catalogue-{q.dynkin.family}{q.n}-{orientation_hash(q)}-f{FORMAT_VERSION}.txt"
    path.write_text(dump_catalogue(q))
    return path


def catalogue_matches(q: QuiverSpec, data: dict) -> bool:
    """Fresh catalogue agrees with loaded cache data."""
    cat: Catalogue = catalogue(q)
    if list(data["reps"]) != cat.order:
        return False
    for d, x in data["reps"].items():
        if {a: [[_int(v) for v in row] for row in m] for a, m in cat[d].maps.items()} != x.maps:
            return False
    return all(data["hom"][i][j] == cat.hom(d, e) and data["ext"][i][j] == cat.ext(d, e)
               for i, d in enumerate(cat.order) for j, e in enumerate(cat.order))


def output_key(command: str, family: str, rank: int, orientation: str, extra: str = "") -> str:
    raw = f"{command}|{family}|{rank}|{orientation}|{extra}|{__version__}"
    return f"{command}-{family}{rank}-{hashlib.sha256(raw.encode()).hexdigest()[:20]}"


def read_output(key: str) -> str | None:
    path = cache_dir() / f"{key}.out"
    if path.is_file():
        return path.read_text()
    return None


def write_output(key: str, text: str) -> None:
    d = cache_dir()
    try:
        d.mkdir(parents=True, exist_ok=True)
        tmp = d / f"{key}.tmp{os.getpid()}"
        tmp.write_text(text)
        tmp.replace(d / f"{key}.out")
    except OSError:
        pass
