"""DOT and JSON emission of the AR quivers of C(H) and of mod End_C(T).

Layout: ``x`` is the tau_c-slice index, ``y`` the row of the Dynkin vertex.
Shifted projectives form the seam slice where the fundamental domain is
glued back onto itself; arrows that cross it (they go right to left in the
layout) are drawn dashed.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .cluster import ClusterCategory, CObject, CQuiver
from .tilting import is_tau2_stable

SCHEMA_VERSION = 1


def _quiver(c: ClusterCategory, mode: str, mark: Sequence[CObject]) -> CQuiver:
    if mode == "cluster":
        return c.ar_quiver
    if mode == "mod-gamma":
        return c.mod_gamma_quiver(mark)
    raise ValueError(f"unknown mode {mode!r}")


def quiver_data(c: ClusterCategory, mode: str = "cluster", mark: Iterable[CObject] = ()) -> dict:
    """Plain-data description shared by the DOT and JSON writers."""
    mark = sorted(set(mark))
    qv = _quiver(c, mode, mark)
    marked = set(mark)
    proj = set()
    inj = set()
    if mode == "mod-gamma":
        proj = marked
        inj = {c.tau_power(x, 2) for x in mark}
    pos = {x: c.coordinates(x) for x in qv.vertices}
    verts = []
    for x in qv.vertices:
        s, r = pos[x]
        v = {"label": str(x), "slice": s, "row": r, "marked": x in marked, "seam": x.is_shifted}
        if mode == "mod-gamma":
            v["projective"] = x in proj
            v["injective"] = x in inj
        verts.append(v)
    arrows = []
    for a, b in qv.arrows:
        arrows.append({"source": str(a), "target": str(b), "seam": pos[b][0] < pos[a][0]})
    present = set(qv.vertices)
    translation = [[str(x), str(qv.translation[x])] for x in qv.vertices if qv.translation[x] in present]
    data = {
        "schema_version": SCHEMA_VERSION,
        "type": c.quiver.dynkin.family,
        "rank": c.n,
        "orientation": c.quiver.orientation_key,
        "mode": mode,
        "twisted": c.twisted,
        "vertices": verts,
        "arrows": arrows,
        "translation": translation,
        "marked": [str(x) for x in mark],
        "removed": [str(x) for x in (qv.removed or [])],
    }
    if mark:
        data["marked_tau2_stable"] = is_tau2_stable(c, mark)
    return data


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(data: dict) -> str:
    name = f"{'mod_gamma' if data['mode'] == 'mod-gamma' else 'C'}_{data['type']}{data['rank']}"
    lines = [f"digraph {name} {{"]
    lines.append(f'  graph [twisted={"true" if data["twisted"] else "false"}, '
                 f'orientation_key={_q(data["orientation"])}, splines=true];')
    lines.append("  node [shape=plaintext, fontsize=10];")
    by_slice: dict = {}
    for v in data["vertices"]:
        by_slice.setdefault(v["slice"], []).append(v)
    for s in sorted(by_slice):
        lines.append(f"  subgraph slice_{s - min(by_slice)} {{")
        lines.append("    rank=same;")
        for v in sorted(by_slice[s], key=lambda v: v["row"]):
            label = v["label"] + ("*" if v["marked"] else "")
            attrs = [f"label={_q(label)}", f'pos="{v["slice"]},{-v["row"]}!"']
            if v["marked"]:
                attrs.append("marked=true")
            if v["seam"]:
                attrs.append('seam="identified"')
                attrs.append("style=dotted")
            if v.get("projective"):
                attrs.append("projective=true")
            if v.get("injective"):
                attrs.append("injective=true")
            lines.append(f"    {_q(v['label'])} [{', '.join(attrs)}];")
        lines.append("  }")
    for a in data["arrows"]:
        extra = " [style=dashed, seam=true]" if a["seam"] else ""
        lines.append(f"  {_q(a['source'])} -> {_q(a['target'])}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_counts(text: str) -> dict:
    """Vertex, arrow and star counts read back from DOT text (for structural checks)."""
    verts = arrows = stars = 0
    for line in text.splitlines():
        s = line.strip()
        if "->" in s:
            arrows += 1
        elif s.startswith('"') and "label=" in s:
            verts += 1
            if "marked=true" in s:
                stars += 1
    return {"vertices": verts, "arrows": arrows, "stars": stars}
