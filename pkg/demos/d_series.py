"""Walk the D series and watch the second family appear at even rank.

Run:  python3 demos/d_series.py          (about ten seconds)
"""
import time

from clustertilt.classify import classify, quiver_for

for n in range(4, 9):
    t0 = time.perf_counter()
    rep = classify(quiver_for("D", n))
    cnt = rep["counts"]
    templates = sorted({f["template"] for f in rep["finalists"]})
    print(f"D{n}: {cnt['indecomposables']:3d} objects, {cnt['cluster_tilting']:6d} tilting,"
          f" {cnt['finalists']:2d} self-injective  {templates}  ({time.perf_counter() - t0:.1f}s)")

# E types have no tau_c^2-fixed tilting object at all
for n in (6, 7, 8):
    rep = classify(quiver_for("E", n))
    print(f"E{n}: {rep['counts']['cluster_tilting']} tilting, {rep['counts']['finalists']} self-injective")
