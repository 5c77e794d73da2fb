"""Command line: ``ctl {classify,orbits,ar-quiver,tilting,catalogue,selfcheck}``.

Exit codes: 0 success, 2 usage error, 3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import __version__
from .cache import dump_catalogue, output_key, read_output, write_output
from .classify import ConsistencyError, classify, orbit_table, quiver_for, report_json, report_text
from .cluster import ClusterError, cluster_category, parse_label
from .dynkin import DynkinError
from .figures import quiver_data, to_dot, to_json
from .tilting import enumerate_cluster_tilting, is_cluster_tilting

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 2, 3

_LABEL_TOKEN = re.compile(r"M\(\s*\d+(?:\s*,\s*\d+)*\s*\)|P\d+\[1\]")


class UsageError(ValueError):
    pass


def parse_mark(text: str | None) -> list:
    """``"M(1,0,0),P2[1]"`` (commas, semicolons or spaces between labels)."""
    if not text:
        return []
    found = _LABEL_TOKEN.findall(text)
    rest = _LABEL_TOKEN.sub("", text)
    if rest.strip(" ,;") or not found:
        raise UsageError(f"cannot parse label list {text!r}")
    try:
        return [parse_label(x) for x in found]
    except ClusterError as exc:
        raise UsageError(str(exc)) from exc


def _quiver(args):
    try:
        return quiver_for(args.family, args.rank, args.orientation)
    except (DynkinError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _common(p: argparse.ArgumentParser, formats: list[str], default: str) -> None:
    p.add_argument("--type", required=True, choices=["A", "D", "E"], dest="family")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--orientation", default=None, help="one +/- per edge, or 'default'")
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--no-cache", action="store_true", help="compute fresh; do not read or write the cache")
    p.add_argument("--check-cache", action="store_true",
                   help="compute fresh and fail (exit 3) if a cached copy differs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ctl", description="Self-injective cluster-tilted algebras of Dynkin type.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", help="full pipeline report")
    _common(p, ["json", "text"], "json")
    p = sub.add_parser("orbits", help="tau_c orbit table")
    _common(p, ["json", "text"], "text")
    p = sub.add_parser("ar-quiver", help="AR quiver of C(H) or of mod End_C(T)")
    _common(p, ["dot", "json"], "dot")
    p.add_argument("--mark", default=None, help="labels to star, e.g. 'M(1,0,0),P2[1]'")
    p.add_argument("--mode", choices=["cluster", "mod-gamma"], default="cluster")
    p = sub.add_parser("tilting", help="stream all cluster-tilting objects as JSON lines")
    _common(p, ["json"], "json")
    p = sub.add_parser("catalogue", help="dump the indecomposable catalogue and Hom/Ext tables")
    _common(p, ["text"], "text")
    p = sub.add_parser("selfcheck", help="run the invariant suites")
    p.add_argument("--scope", "--mode", dest="scope", choices=["fast", "full"], default="fast")
    return ap


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cached(args, command: str, extra: str, compute) -> str:
    key = output_key(command, args.family, args.rank, args.orientation or "default", extra)
    if args.check_cache:
        fresh = compute()
        old = read_output(key)
        if old is not None and old != fresh:
            raise ConsistencyError("cached output differs from a fresh computation")
        write_output(key, fresh)
        return fresh
    if not args.no_cache:
        hit = read_output(key)
        if hit is not None:
            return hit
    text = compute()
    if not args.no_cache:
        write_output(key, text)
    return text


def cmd_classify(args) -> int:
    q = _quiver(args)

    def compute():
        rep = classify(q, jobs=args.jobs)
        return report_json(rep) if args.format == "json" else report_text(rep)

    t0 = time.perf_counter()
    text = _cached(args, "classify", args.format, compute)
    _emit(text, args.output)
    if args.format == "text":
        print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_OK


def cmd_orbits(args) -> int:
    q = _quiver(args)
    c = cluster_category(q)
    table = orbit_table(c)
    if args.format == "json":
        text = json.dumps(table, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"tau_c orbits of C({args.family}{args.rank}), orientation {table['orientation']}"]
        for o in table["orbits"]:
            lines.append(f"  length {o['length']:3d}  representative {o['representative']}")
        lines.append(f"lengths {[o['length'] for o in table['orbits']]}"
                     + ("  (twisted)" if table["twisted"] else ""))
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_ar_quiver(args) -> int:
    q = _quiver(args)
    c = cluster_category(q)
    mark = parse_mark(args.mark)
    for x in mark:
        if x not in c:
            raise UsageError(f"{x} is not an indecomposable of C({args.family}{args.rank})")
    if args.mode == "mod-gamma" and not is_cluster_tilting(c, mark):
        raise UsageError("--mode mod-gamma needs --mark to be a cluster-tilting object")
    data = quiver_data(c, args.mode, mark)
    _emit(to_dot(data) if args.format == "dot" else to_json(data), args.output)
    return EXIT_OK


def cmd_tilting(args) -> int:
    q = _quiver(args)
    c = cluster_category(q)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        for t in enumerate_cluster_tilting(c):
            out.write(json.dumps([str(x) for x in t]) + "\n")
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def cmd_catalogue(args) -> int:
    q = _quiver(args)
    _emit(_cached(args, "catalogue", "", lambda: dump_catalogue(q)), args.output)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    from .selfcheck import run
    results = run(args.scope, emit=print)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_INTERNAL if failed else EXIT_OK


COMMANDS = {"classify": cmd_classify, "orbits": cmd_orbits, "ar-quiver": cmd_ar_quiver,
            "tilting": cmd_tilting, "catalogue": cmd_catalogue, "selfcheck": cmd_selfcheck}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ctl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        print(f"ctl: internal consistency failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
