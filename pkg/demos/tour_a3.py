"""A guided look at the cluster category of A3 and its one self-injective shape.

Run:  python3 demos/tour_a3.py
"""
from clustertilt.algebra import kupisch_series, nakayama_permutation
from clustertilt.cluster import cluster_category
from clustertilt.dynkin import build_dynkin
from clustertilt.endalg import end_algebra
from clustertilt.tilting import enumerate_cluster_tilting, selfinjective_candidates

c = cluster_category(build_dynkin("A", 3))
print(f"C(A3) has {len(c)} indecomposables")
for orbit in c.orbits:
    print("  tau_c orbit:", "  ".join(map(str, orbit)))

tiltings = enumerate_cluster_tilting(c)
print(f"\n{len(tiltings)} cluster-tilting objects (Catalan number C_4 = 14)")

# Ext_C is symmetric, so compatibility is a plain graph
objs = list(c.labels)
print("\nExt_C dimensions (rows and columns in catalogue order):")
for x in objs:
    print(f"  {str(x):>9} " + " ".join(str(c.ext_c_dim(x, y)) for y in objs))

print("\ntilting objects fixed by tau_c^2:")
for t in selfinjective_candidates(c, tiltings):
    alg = end_algebra(c, t).algebra
    print(f"  T = {{{', '.join(map(str, t))}}}")
    print(f"    dim End_C(T) = {alg.dim}, Kupisch series {kupisch_series(alg)},"
          f" Nakayama permutation {nakayama_permutation(alg)}")
