"""Write DOT pictures for D6: the whole cluster category with a biserial
finalist starred, and the module category of its endomorphism algebra.

Run:  python3 demos/draw_d6.py [outdir]
Render with e.g.  neato -n -Tsvg d6_cluster.dot > d6_cluster.svg
"""
import sys
from pathlib import Path

from clustertilt.classify import classify, quiver_for
from clustertilt.cluster import cluster_category, parse_label
from clustertilt.figures import dot_counts, quiver_data, to_dot

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

q = quiver_for("D", 6)
c = cluster_category(q)
finalist = next(f for f in classify(q)["finalists"] if f["family"] == "BiserialD2m")
t = [parse_label(x) for x in finalist["tilting"]]
print("biserial finalist:", ", ".join(finalist["tilting"]))
print("relation scalars:", finalist["algebra"]["matches"][0]["scalars"])

for mode in ("cluster", "mod-gamma"):
    text = to_dot(quiver_data(c, mode, t))
    path = out / f"d6_{mode}.dot"
    path.write_text(text)
    print(f"{path}: {dot_counts(text)}")
