"""The cluster category C(H) of a Dynkin quiver.

Objects are labelled against the fundamental domain ``mod H + {P(a)[1]}``:
a :class:`CObject` is either a module (by dimension vector) or a shifted
projective.  Every table is reduced to Hom and Ext^1 dimensions in ``mod H``
computed by :mod:`clustertilt.reps`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence

from .dynkin import QuiverSpec, build_dynkin, simple_reflection, unit
from .reps import Catalogue, catalogue

MODULE, SHIFTED = 0, 1


class ClusterError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CObject:
    """Indecomposable of C(H): ``Module(dim)`` or ``ShiftedProj(vertex)``.

    The derived ordering (kind, dim, vertex) is the canonical one: modules by
    dimension vector, then shifted projectives by vertex.
    """

    kind: int
    dim: tuple = ()
    vertex: int = 0

    @property
    def is_module(self) -> bool:
        return self.kind == MODULE

    @property
    def is_shifted(self) -> bool:
        return self.kind == SHIFTED

    def __str__(self):
        if self.kind == MODULE:
            return "M(" + ",".join(map(str, self.dim)) + ")"
        return f"P{self.vertex}[1]"

    __repr__ = __str__


def Module(dim: Sequence[int]) -> CObject:
    return CObject(MODULE, tuple(dim), 0)


def ShiftedProj(a: int) -> CObject:
    return CObject(SHIFTED, (), a)


_LABEL = re.compile(r"^\s*(?:M\(([\d,\s]+)\)|P(\d+)\[1\])\s*$")


def parse_label(text: str) -> CObject:
    """Inverse of ``str(CObject)``: ``M(1,1,0)`` or ``P2[1]``."""
    m = _LABEL.match(text)
    if not m:
        raise ClusterError(f"cannot parse label {text!r}")
    if m.group(1) is not None:
        return Module(int(x) for x in m.group(1).split(","))
    return ShiftedProj(int(m.group(2)))


class ClusterCategory:
    """Labels, translation, Hom/Ext tables and AR quiver of C(H) for one orientation."""

    def __init__(self, q: QuiverSpec):
        self.quiver = q
        self.cat: Catalogue = catalogue(q)
        self.labels: List[CObject] = [Module(d) for d in self.cat.order] + [ShiftedProj(a) for a in q.vertices]
        self.index: Dict[CObject, int] = {x: i for i, x in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return self.quiver.n

    def __len__(self):
        return len(self.labels)

    def __contains__(self, x: CObject) -> bool:
        return x in self.index

    def check(self, x: CObject) -> CObject:
        if x not in self.index:
            raise ClusterError(f"{x} is not an indecomposable of C({self.quiver})")
        return x

    # -- translation -------------------------------------------------------

    def tau(self, x: CObject) -> CObject:
        self.check(x)
        cat = self.cat
        if x.is_shifted:
            return Module(cat.injectives[x.vertex])
        t = cat.tau[x.dim]
        if t is None:
            a = cat.position[x.dim][0]
            return ShiftedProj(a)
        return Module(t)

    def tau_inv(self, x: CObject) -> CObject:
        self.check(x)
        cat = self.cat
        if x.is_shifted:
            return Module(cat.projectives[x.vertex])
        t = cat.tau_inv[x.dim]
        if t is None:
            a = next(v for v, d in cat.injectives.items() if d == x.dim)
            return ShiftedProj(a)
        return Module(t)

    def tau_power(self, x: CObject, k: int) -> CObject:
        for _ in range(abs(k)):
            x = self.tau(x) if k > 0 else self.tau_inv(x)
        return x

    @cached_property
    def tau_perm(self) -> List[int]:
        return [self.index[self.tau(x)] for x in self.labels]

    @cached_property
    def orbits(self) -> List[List[CObject]]:
        """Cycles of ``tau_c`` starting at their canonically least label, sorted by that label."""
        seen = set()
        out = []
        for i, x in enumerate(self.labels):
            if i in seen:
                continue
            cyc = []
            j = i
            while j not in seen:
                seen.add(j)
                cyc.append(self.labels[j])
                j = self.tau_perm[j]
            out.append(cyc)
        return out

    def orbit_of(self, x: CObject) -> List[CObject]:
        return next(o for o in self.orbits if x in o)

    @cached_property
    def tau_period(self) -> int:
        from math import lcm
        out = 1
        for o in self.orbits:
            out = lcm(out, len(o))
        return out

    # -- Hom and Ext --------------------------------------------------------

    def hom_c_dim(self, x: CObject, y: CObject) -> int:
        """``dim Hom_D(x, y) + dim Hom_D(x, F y)`` with ``F = tau^{-1}[1]``."""
        self.check(x)
        self.check(y)
        cat = self.cat
        if x.is_module and y.is_module:
            val = cat.hom(x.dim, y.dim)
            t = cat.tau_inv[y.dim]
            if t is not None:
                val += cat.ext(x.dim, t)
            return val
        if x.is_module:
            return cat.ext(x.dim, cat.projectives[y.vertex])
        if y.is_module:
            t = cat.tau_inv[y.dim]
            return t[x.vertex - 1] if t is not None else 0
        return cat.projectives[y.vertex][x.vertex - 1]

    def ext_c_dim(self, x: CObject, y: CObject) -> int:
        return self.hom_c_dim(x, self.tau(y))

    @cached_property
    def hom_table(self) -> List[List[int]]:
        return [[self.hom_c_dim(x, y) for y in self.labels] for x in self.labels]

    @cached_property
    def ext_table(self) -> List[List[int]]:
        n = len(self.labels)
        h = self.hom_table
        tp = self.tau_perm
        return [[h[i][tp[j]] for j in range(n)] for i in range(n)]

    # -- hammocks -----------------------------------------------------------

    def hammock_sequence(self, a: int, parity_report: bool = False):
        """``[(t, dim Hom(P(a), tau^{-t} P(a)), is_injective)]`` until the injective end.

        With ``parity_report`` a second value tells whether some odd ``t`` has
        nonzero Hom with a non-injective target.
        """
        cat = self.cat
        d = cat.projectives[a]
        seq = []
        t = 0
        p = d
        while d is not None:
            inj = cat.is_injective(d)
            seq.append((t, cat.hom(p, d), inj))
            d = cat.tau_inv[d]
            t += 1
        if parity_report:
            flag = any(t % 2 == 1 and h > 0 and not inj for t, h, inj in seq)
            return seq, flag
        return seq

    # -- AR quivers ---------------------------------------------------------

    @cached_property
    def ar_arrows_mod_h(self) -> List[tuple]:
        """Arrows of the AR quiver of mod H, knitted from the projectives."""
        q, cat = self.quiver, self.cat
        arrows = {(cat.projectives[b], cat.projectives[a]) for a, b in q.arrows}
        frontier = list(arrows)
        while frontier:
            nxt = []
            for x, y in frontier:
                t = cat.tau_inv[x]
                if t is not None:
                    arr = (y, t)
                    if arr not in arrows:
                        arrows.add(arr)
                        nxt.append(arr)
            frontier = nxt
        return sorted(arrows)

    @cached_property
    def ar_quiver(self) -> "CQuiver":
        q = self.quiver
        arrows = {(Module(x), Module(y)) for x, y in self.ar_arrows_mod_h}
        arrows |= {(ShiftedProj(b), ShiftedProj(a)) for a, b in q.arrows}
        frontier = list(arrows)
        rounds = 0
        while frontier:
            rounds += 1
            if rounds > 4 * len(self.labels) + 4:
                raise ClusterError("mesh closure did not stabilize")
            nxt = []
            for y, x in frontier:
                arr = (self.tau(x), y)
                if arr not in arrows:
                    arrows.add(arr)
                    nxt.append(arr)
            frontier = nxt
        key = self.index.__getitem__
        ordered = sorted(arrows, key=lambda a: (key(a[0]), key(a[1])))
        return CQuiver(list(self.labels), ordered, {x: self.tau(x) for x in self.labels})

    def mod_gamma_quiver(self, tilting: Iterable[CObject]) -> "CQuiver":
        from .tilting import is_cluster_tilting
        t = sorted(tilting)
        if not is_cluster_tilting(self, t):
            raise ClusterError("marking is not cluster-tilting")
        removed = {self.tau(x) for x in t}
        full = self.ar_quiver
        verts = [x for x in full.vertices if x not in removed]
        arrows = [(a, b) for a, b in full.arrows if a not in removed and b not in removed]
        trans = {x: full.translation[x] for x in verts}
        return CQuiver(verts, arrows, trans, removed=sorted(removed))

    # -- slice coordinates --------------------------------------------------

    @cached_property
    def heights(self) -> Dict[int, int]:
        """``h(a) = h(b) + 1`` for each arrow ``a -> b``, normalized to minimum 0."""
        q = self.quiver
        h = {1: 0}
        stack = [1]
        while stack:
            v = stack.pop()
            for s, t in q.arrows:
                if s == v and t not in h:
                    h[t] = h[v] - 1
                    stack.append(t)
                elif t == v and s not in h:
                    h[s] = h[v] + 1
                    stack.append(s)
        lo = min(h.values())
        return {v: x - lo for v, x in h.items()}

    def coordinates(self, x: CObject) -> tuple[int, int]:
        """``(slice, row)``: ``tau^{-t} P(a)`` sits at ``(2t + h(a), a)``; ``P(a)[1]`` at ``t = -1``."""
        if x.is_shifted:
            a = x.vertex
            return self.heights[a] - 2, a
        a, t = self.cat.position[x.dim]
        return 2 * t + self.heights[a], a

    @cached_property
    def twisted(self) -> bool:
        """True when the tau_c-orbits have unequal lengths (a Moebius-type identification)."""
        return len({len(o) for o in self.orbits}) > 1


@dataclass
class CQuiver:
    vertices: List[CObject]
    arrows: List[tuple]
    translation: Dict[CObject, CObject]
    removed: List[CObject] | None = None

    def arrow_count(self, x: CObject, y: CObject) -> int:
        return sum(1 for a in self.arrows if a == (x, y))

    def check_mesh(self) -> bool:
        """``#(y -> x) == #(tau x -> y)`` for all pairs, on the full quiver."""
        arrows = set(self.arrows)
        for y, x in arrows:
            if (self.translation[x], y) not in arrows:
                return False
        for z, y in arrows:
            # every arrow tau(x) -> y comes from some arrow y -> x
            pre = [x for x, t in self.translation.items() if t == z]
            if not any((y, x) in arrows for x in pre):
                return False
        return True


@lru_cache(maxsize=None)
def cluster_category(q: QuiverSpec) -> ClusterCategory:
    return ClusterCategory(q)


def default_category(family: str, rank: int) -> ClusterCategory:
    return cluster_category(build_dynkin(family, rank))


def tau_c(c: ClusterCategory, x: CObject) -> CObject:
    return c.tau(x)


def tau_c_orbits(c: ClusterCategory) -> List[List[CObject]]:
    return c.orbits


def reflect_label(q: QuiverSpec, v: int, x: CObject) -> CObject:
    """Image of a label of C(Q) in C(Q') for the sink reflection at ``v``, Q' = Q.reflect(v).

    The reflection functor is a triangle equivalence of cluster categories:
    ``S(v) -> P'(v)[1]``, ``P(v)[1] -> S'(v)``, other modules follow
    ``s_v`` and other shifted projectives are fixed.
    """
    if not q.is_sink(v):
        raise ClusterError(f"vertex {v} is not a sink of {q}")
    e = unit(q.n, v)
    if x.is_module:
        if x.dim == e:
            return ShiftedProj(v)
        return Module(simple_reflection(q, v, x.dim))
    if x.vertex == v:
        return Module(e)
    return x


def transport_labels(q: QuiverSpec, sinks: Sequence[int], xs: Iterable[CObject]) -> tuple[QuiverSpec, List[CObject]]:
    """Push labels through a sequence of sink reflections."""
    cur = q
    out = list(xs)
    for v in sinks:
        out = [reflect_label(cur, v, x) for x in out]
        cur = cur.reflect(v)
    return cur, out
