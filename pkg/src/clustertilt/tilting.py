"""Rigid and cluster-tilting objects of C(H).

Cluster-tilting objects are the maximal cliques of the compatibility graph
(``x ~ y`` iff ``Ext_C(x, y) = 0``).  In Dynkin type every maximal clique has
exactly ``n`` vertices; the search asserts it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .cluster import ClusterCategory, CObject

TiltingObject = Tuple[CObject, ...]


class TiltingError(RuntimeError):
    pass


@dataclass
class CompatGraph:
    vertices: List[CObject]
    masks: List[int]

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.masks) // 2

    def degree(self, i: int) -> int:
        return bin(self.masks[i]).count("1")

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.masks[i] >> j & 1)


def compat_graph(c: ClusterCategory) -> CompatGraph:
    ext = c.ext_table
    n = len(c)
    masks = []
    for i in range(n):
        m = 0
        for j in range(n):
            if i != j and ext[i][j] == 0:
                m |= 1 << j
        masks.append(m)
    return CompatGraph(list(c.labels), masks)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def maximal_cliques(g: CompatGraph) -> List[List[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in sorted order."""
    out: List[List[int]] = []
    masks = g.masks

    def expand(r: List[int], p: int, x: int):
        if not p and not x:
            out.append(sorted(r))
            return
        pux = p | x
        pivot = max(_bits(pux), key=lambda u: bin(p & masks[u]).count("1"))
        for v in list(_bits(p & ~masks[pivot])):
            r.append(v)
            expand(r, p & masks[v], x & masks[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << len(masks)) - 1, 0)
    out.sort()
    return out


def enumerate_cluster_tilting(c: ClusterCategory) -> List[TiltingObject]:
    """Every cluster-tilting object, as sorted label tuples in canonical order."""
    g = compat_graph(c)
    cliques = maximal_cliques(g)
    for cl in cliques:
        if len(cl) != c.n:
            raise TiltingError(f"maximal clique of size {len(cl)} != {c.n}: {[str(c.labels[i]) for i in cl]}")
    return [tuple(c.labels[i] for i in cl) for cl in cliques]


def is_cluster_tilting(c: ClusterCategory, objs: Iterable[CObject]) -> bool:
    s = list(objs)
    if len(s) != c.n or len(set(s)) != len(s):
        return False
    if any(x not in c for x in s):
        return False
    return all(c.ext_c_dim(x, y) == 0 for i, x in enumerate(s) for y in s[i:])


def tau_image(c: ClusterCategory, t: Sequence[CObject], k: int = 1) -> TiltingObject:
    return tuple(sorted(c.tau_power(x, k) for x in t))


def is_tau2_stable(c: ClusterCategory, t: Sequence[CObject]) -> bool:
    return tau_image(c, t, 2) == tuple(sorted(t))


def selfinjective_candidates(c: ClusterCategory, tiltings: Sequence[TiltingObject] | None = None) -> List[TiltingObject]:
    """The cluster-tilting objects ``T`` with ``tau_c^2 T = T``."""
    if tiltings is None:
        tiltings = enumerate_cluster_tilting(c)
    return [t for t in tiltings if is_tau2_stable(c, t)]


def catalan(k: int) -> int:
    from math import comb
    return comb(2 * k, k) // (k + 1)


def expected_count(family: str, rank: int) -> int:
    """Closed-form number of cluster-tilting objects, kept for cross-reference only."""
    from math import comb
    if family == "A":
        return catalan(rank + 1)
    if family == "D":
        return (3 * rank - 2) * comb(2 * rank - 2, rank - 1) // rank
    return {6: 833, 7: 4160, 8: 25080}[rank]
