"""Representations of Dynkin quivers over the rationals.

This is the brute-force layer: Hom spaces are kernels of commuting-square
systems, Ext^1 is the cokernel of ``Hom(P0, Z) -> Hom(P1, Z)`` for a minimal
projective presentation, and the Auslander-Reiten translates are computed as
composites of BGP reflection functors, on objects and on morphisms.

Matrices follow the column convention: the map of an arrow ``a -> b`` has
shape ``dims[b] x dims[a]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence

from . import linalg as la
from .dynkin import (
    QuiverSpec, admissible_order, euler_form, positive_roots, unit,
)

Arrow = tuple


class RepresentationError(ValueError):
    pass


class Representation:
    """Finite-dimensional representation of an oriented Dynkin quiver."""

    __slots__ = ("quiver", "dims", "maps", "_path_maps")

    def __init__(self, quiver: QuiverSpec, dims: Sequence[int], maps: Dict[Arrow, la.Matrix] | None = None):
        self.quiver = quiver
        self.dims = tuple(int(x) for x in dims)
        if len(self.dims) != quiver.n or any(x < 0 for x in self.dims):
            raise RepresentationError(f"bad dimension vector {self.dims}")
        maps = dict(maps or {})
        self.maps = {}
        for a in quiver.arrows:
            s, t = a
            m = maps.pop(a, None)
            if m is None:
                m = la.zeros(self.dims[t - 1], self.dims[s - 1])
            if len(m) != self.dims[t - 1] or any(len(r) != self.dims[s - 1] for r in m):
                raise RepresentationError(f"map of arrow {a} has wrong shape")
            self.maps[a] = [list(r) for r in m]
        if maps:
            raise RepresentationError(f"maps given for non-arrows {sorted(maps)}")
        self._path_maps = {}

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def path_map(self, u: int, w: int) -> la.Matrix | None:
        """Matrix of the unique path ``u -> ... -> w``, or None when there is no path."""
        key = (u, w)
        if key in self._path_maps:
            return self._path_maps[key]
        path = self.quiver.paths.get(key)
        if path is None:
            m = None
        else:
            m = la.identity(self.dim(u))
            for a in path:
                m = la.matmul(self.maps[a], m, cols=self.dim(u))
        self._path_maps[key] = m
        return m

    def __repr__(self):
        return f"Representation({self.quiver}, dims={self.dims})"


@dataclass
class Morphism:
    source: Representation
    target: Representation
    maps: Dict[int, la.Matrix]

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.maps.values())

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other``."""
        maps = {v: la.matmul(self.maps[v], other.maps[v], cols=other.source.dim(v))
                for v in self.source.quiver.vertices}
        return Morphism(other.source, self.target, maps)

    def flat(self) -> list:
        out = []
        for v in self.source.quiver.vertices:
            for row in self.maps[v]:
                out.extend(row)
        return out

    def is_valid(self) -> bool:
        """Every commuting square ``Y_a f_s = f_t X_a`` holds."""
        for a in self.source.quiver.arrows:
            s, t = a
            lhs = la.matmul(self.target.maps[a], self.maps[s], cols=self.source.dim(s))
            rhs = la.matmul(self.maps[t], self.source.maps[a], cols=self.source.dim(s))
            if lhs != rhs:
                return False
        return True


def identity_morphism(x: Representation) -> Morphism:
    return Morphism(x, x, {v: la.identity(x.dim(v)) for v in x.quiver.vertices})


def zero_morphism(x: Representation, y: Representation) -> Morphism:
    return Morphism(x, y, {v: la.zeros(y.dim(v), x.dim(v)) for v in x.quiver.vertices})


def projective_rep(q: QuiverSpec, a: int) -> Representation:
    """``P(a)``: one basis vector per path starting at ``a`` (at most one per vertex)."""
    dims = [1 if q.has_path(a, v) else 0 for v in q.vertices]
    maps = {}
    for s, t in q.arrows:
        maps[(s, t)] = [[1]] if dims[s - 1] and dims[t - 1] else la.zeros(dims[t - 1], dims[s - 1])
    return Representation(q, dims, maps)


def injective_rep(q: QuiverSpec, a: int) -> Representation:
    """``I(a)``: one basis vector per path ending at ``a``."""
    dims = [1 if q.has_path(v, a) else 0 for v in q.vertices]
    maps = {}
    for s, t in q.arrows:
        maps[(s, t)] = [[1]] if dims[s - 1] and dims[t - 1] else la.zeros(dims[t - 1], dims[s - 1])
    return Representation(q, dims, maps)


def simple_rep(q: QuiverSpec, a: int) -> Representation:
    return Representation(q, unit(q.n, a))


def direct_sum(x: Representation, y: Representation) -> Representation:
    maps = {}
    for a in x.quiver.arrows:
        s, t = a
        top = [list(r) + [0] * y.dim(s) for r in x.maps[a]]
        bot = [[0] * x.dim(s) + list(r) for r in y.maps[a]]
        maps[a] = top + bot
    return Representation(x.quiver, [p + r for p, r in zip(x.dims, y.dims)], maps)


# ---------------------------------------------------------------------------
# Hom spaces


def _hom_system(x: Representation, y: Representation):
    q = x.quiver
    offsets = {}
    n = 0
    for v in q.vertices:
        offsets[v] = n
        n += y.dim(v) * x.dim(v)
    rows = []
    for a in q.arrows:
        s, t = a
        ya, xa = y.maps[a], x.maps[a]
        # Y_a f_s - f_t X_a = 0, entry (i, j) of a dims_y[t] x dims_x[s] matrix
        for i in range(y.dim(t)):
            for j in range(x.dim(s)):
                row = [0] * n
                for k in range(y.dim(s)):
                    c = ya[i][k]
                    if c:
                        row[offsets[s] + k * x.dim(s) + j] += c
                for k in range(x.dim(t)):
                    c = xa[k][j]
                    if c:
                        row[offsets[t] + i * x.dim(t) + k] -= c
                rows.append(row)
    return rows, n, offsets


def _unflatten(x: Representation, y: Representation, vec, offsets) -> Morphism:
    maps = {}
    for v in x.quiver.vertices:
        o = offsets[v]
        c = x.dim(v)
        maps[v] = [list(vec[o + i * c: o + (i + 1) * c]) for i in range(y.dim(v))]
    return Morphism(x, y, maps)


def hom_basis(x: Representation, y: Representation) -> List[Morphism]:
    """Basis of ``Hom(X, Y)`` as the kernel of the commuting-square system."""
    if x.quiver != y.quiver:
        raise RepresentationError("representations over different quivers")
    rows, n, offsets = _hom_system(x, y)
    if n == 0:
        return []
    return [_unflatten(x, y, v, offsets) for v in la.nullspace(rows, n)]


def hom_dim_linear(x: Representation, y: Representation) -> int:
    """``dim Hom(X, Y)`` from the rank of the commuting-square system."""
    rows, n, _ = _hom_system(x, y)
    return n - (la.rank(rows) if rows else 0)


def morphism_coordinates(basis: Sequence[Morphism], f: Morphism) -> list:
    coords = la.coordinates([b.flat() for b in basis], f.flat())
    if coords is None:
        raise RepresentationError("morphism is not in the span of the basis")
    return coords


# ---------------------------------------------------------------------------
# Projective covers and presentations


@dataclass
class FreeMap:
    """A map from ``P(b_1) + ... + P(b_r)`` into some representation.

    ``gens`` lists the vertices ``b_l``; ``images[l]`` is the image of the
    generator ``e_{b_l}`` in the target at vertex ``b_l``.
    """

    gens: List[int]
    images: List[list]


def _radical_at(x: Representation, v: int) -> list:
    vecs = []
    for a in x.quiver.in_arrows(v):
        m = x.maps[a]
        for j in range(x.dim(a[0])):
            col = [m[i][j] for i in range(x.dim(v))]
            if any(col):
                vecs.append(col)
    return vecs


def projective_cover(x: Representation) -> FreeMap:
    """Top lifts of ``X``: generators complementing the radical at each vertex."""
    gens, images = [], []
    for v in x.quiver.vertices:
        rad = _radical_at(x, v)
        for u in la.complement_basis(rad, x.dim(v)):
            gens.append(v)
            images.append(u)
    return FreeMap(gens, images)


def free_module_basis(q: QuiverSpec, gens: Sequence[int], v: int) -> list[int]:
    """Indices ``l`` with a path ``gens[l] -> v``; these index a basis of ``(+P(gens))_v``."""
    return [l for l, b in enumerate(gens) if q.has_path(b, v)]


def free_map_at(x: Representation, f: FreeMap, v: int) -> tuple[list[int], la.Matrix]:
    """The vertex-``v`` component of the map ``+P(b_l) -> X`` (columns indexed by basis)."""
    idx = free_module_basis(x.quiver, f.gens, v)
    cols = []
    for l in idx:
        pm = x.path_map(f.gens[l], v)
        cols.append(la.matvec(pm, f.images[l]))
    return idx, la.transpose(cols, x.dim(v)) if cols else [[] for _ in range(x.dim(v))]


@dataclass
class Presentation:
    """Minimal projective resolution ``0 -> P1 -> P0 -> X -> 0``.

    ``cover`` maps ``P0 = +P(top)`` onto X.  ``syzygy`` maps ``P1 = +P(rel)``
    into P0; its generator images are vectors in the basis of ``(P0)_b``
    given by :func:`free_module_basis`.
    """

    rep: Representation
    cover: FreeMap
    syzygy: FreeMap

    @property
    def top(self) -> list[int]:
        return self.cover.gens

    @property
    def rel(self) -> list[int]:
        return self.syzygy.gens


def free_representation(q: QuiverSpec, gens: Sequence[int]) -> Representation:
    """``P(gens[0]) + P(gens[1]) + ...`` with the path basis at each vertex."""
    dims = [len(free_module_basis(q, gens, v)) for v in q.vertices]
    maps = {}
    for a in q.arrows:
        s, t = a
        si = free_module_basis(q, gens, s)
        ti = free_module_basis(q, gens, t)
        pos = {l: k for k, l in enumerate(ti)}
        m = la.zeros(len(ti), len(si))
        for j, l in enumerate(si):
            m[pos[l]][j] = 1
        maps[a] = m
    return Representation(q, dims, maps)


def presentation(x: Representation) -> Presentation:
    q = x.quiver
    cover = projective_cover(x)
    p0 = free_representation(q, cover.gens)
    # kernel of the cover, vertex by vertex, as a subspace of P0
    kernel = {}
    for v in q.vertices:
        idx, m = free_map_at(x, cover, v)
        if not idx:
            kernel[v] = []
        elif x.dim(v) == 0:
            kernel[v] = la.identity(len(idx))
        else:
            kernel[v] = la.nullspace(m, len(idx))
    gens, images = [], []
    for v in q.vertices:
        rad = []
        for a in q.in_arrows(v):
            for w in kernel[a[0]]:
                img = la.matvec(p0.maps[a], w)
                if any(img):
                    rad.append(img)
        kv = kernel[v]
        if not kv:
            continue
        picked = la.column_basis(rad + kv, p0.dim(v))
        for i in picked:
            if i >= len(rad):
                gens.append(v)
                images.append(kv[i - len(rad)])
    return Presentation(x, cover, FreeMap(gens, images))


def hom_from_free_matrix(q: QuiverSpec, gens0: Sequence[int], gens1: Sequence[int],
                         images1: Sequence[list], z: Representation) -> la.Matrix:
    """Matrix of ``Hom(+P(gens0), Z) -> Hom(+P(gens1), Z)``, ``phi -> phi o d``.

    ``Hom(+P(gens), Z)`` is identified with ``+ Z_{gens[k]}``; ``d`` sends the
    ``l``-th generator of the source to ``images1[l]``, a vector in the basis
    of ``(+P(gens0))_{gens1[l]}``.
    """
    col_off, n = [], 0
    for b in gens0:
        col_off.append(n)
        n += z.dim(b)
    rows: la.Matrix = []
    for l, b in enumerate(gens1):
        idx = free_module_basis(q, gens0, b)
        block = la.zeros(z.dim(b), n)
        for c, k in zip(images1[l], idx):
            if not c:
                continue
            pm = z.path_map(gens0[k], b)
            o = col_off[k]
            for i in range(z.dim(b)):
                for j in range(z.dim(gens0[k])):
                    if pm[i][j]:
                        block[i][o + j] += c * pm[i][j]
        rows.extend(block)
    return rows


def presentation_matrix(pres: Presentation, z: Representation) -> tuple[la.Matrix, int, int]:
    """``Hom(P0, Z) -> Hom(P1, Z)`` with its column and row counts."""
    q = pres.rep.quiver
    ncols = sum(z.dim(b) for b in pres.top)
    nrows = sum(z.dim(b) for b in pres.rel)
    m = hom_from_free_matrix(q, pres.top, pres.rel, pres.syzygy.images, z)
    return m, ncols, nrows


def hom_ext_dims(pres: Presentation, z: Representation) -> tuple[int, int]:
    """``(dim Hom(X, Z), dim Ext^1(X, Z))`` from one rank computation."""
    m, ncols, nrows = presentation_matrix(pres, z)
    r = la.rank(m) if m and ncols else 0
    return ncols - r, nrows - r


def dim_ext1(x: Representation, y: Representation) -> int:
    """``dim Hom(X, Y) - <dim X, dim Y>``."""
    return hom_dim_linear(x, y) - euler_form(x.quiver, x.dims, y.dims)


# ---------------------------------------------------------------------------
# Ext^1 spaces with functorial actions


class Ext1Space:
    """``Ext^1(X, Z)`` as ``coker(Hom(P0, Z) -> Hom(P1, Z))`` with chosen coset basis."""

    def __init__(self, x: Representation, z: Representation, pres: Presentation | None = None):
        self.source = x
        self.target = z
        self.pres = pres or presentation(x)
        m, ncols, nrows = presentation_matrix(self.pres, z)
        self.ambient = nrows
        if nrows == 0:
            self.proj, self.section = [], []
        else:
            image = [list(col) for col in la.transpose(m, ncols)] if m and ncols else []
            self.proj = la.left_nullspace(m, nrows) if image else la.identity(nrows)
            self.section = la.right_inverse(self.proj, nrows) if self.proj else []

    @property
    def dim(self) -> int:
        return len(self.proj)

    def _project(self, mat: la.Matrix, src: "Ext1Space") -> la.Matrix:
        if self.dim == 0 or src.dim == 0:
            return la.zeros(self.dim, src.dim)
        return la.matmul(la.matmul(self.proj, mat, cols=src.ambient), src.section, cols=src.dim)

    def pullback(self, f: Morphism, other: "Ext1Space") -> la.Matrix:
        """Matrix of ``Ext^1(X, Z) -> Ext^1(X', Z)`` for ``f: X' -> X``.

        ``other`` is the space ``Ext^1(X', Z)``.
        """
        lift = lift_to_syzygies(f, other.pres, self.pres)
        z = self.target
        q = z.quiver
        # psi in Hom(P1, Z) goes to psi o f1 in Hom(P1', Z)
        col_off, n = [], 0
        for b in self.pres.rel:
            col_off.append(n)
            n += z.dim(b)
        rows = []
        for lp, bp in enumerate(other.pres.rel):
            idx = free_module_basis(q, self.pres.rel, bp)
            block = la.zeros(z.dim(bp), n)
            for c, l in zip(lift[lp], idx):
                if not c:
                    continue
                pm = z.path_map(self.pres.rel[l], bp)
                o = col_off[l]
                for i in range(z.dim(bp)):
                    for j in range(len(pm[0]) if pm else 0):
                        if pm[i][j]:
                            block[i][o + j] += c * pm[i][j]
            rows.extend(block)
        return other._project(rows, self)

    def pushforward(self, h: Morphism, other: "Ext1Space") -> la.Matrix:
        """Matrix of ``Ext^1(X, Z) -> Ext^1(X, Z')`` for ``h: Z -> Z'``."""
        rels = self.pres.rel
        n_src = sum(self.target.dim(b) for b in rels)
        n_dst = sum(other.target.dim(b) for b in rels)
        mat = la.zeros(n_dst, n_src)
        ro = co = 0
        for b in rels:
            hb = h.maps[b]
            for i in range(other.target.dim(b)):
                for j in range(self.target.dim(b)):
                    mat[ro + i][co + j] = hb[i][j]
            ro += other.target.dim(b)
            co += self.target.dim(b)
        return other._project(mat, self)


def lift_to_syzygies(f: Morphism, pres_src: Presentation, pres_dst: Presentation) -> list[list]:
    """Lift ``f: X' -> X`` to ``f1: P1' -> P1``.

    Returns, for each generator ``l'`` of ``P1'``, the coordinates of ``f1(e_{l'})``
    in the basis of ``(P1)_{b_{l'}}``.
    """
    xs, xd = f.source, f.target
    q = xs.quiver
    # f0 on generators of P0'
    f0 = []
    for k, v in enumerate(pres_src.cover.gens):
        want = la.matvec(f.maps[v], pres_src.cover.images[k]) if xd.dim(v) else []
        idx, m = free_map_at(xd, pres_dst.cover, v)
        if not idx:
            f0.append([])
            continue
        sol = la.solve(m, [[w] for w in want], len(idx)) if xd.dim(v) else [[0] for _ in idx]
        if sol is None:
            raise RepresentationError("cover is not surjective")
        f0.append([r[0] for r in sol])
    out = []
    for lp, b in enumerate(pres_src.syzygy.gens):
        # element of (P0')_b, then apply f0 at b
        src_idx = free_module_basis(q, pres_src.cover.gens, b)
        dst_idx = free_module_basis(q, pres_dst.cover.gens, b)
        pos = {l: i for i, l in enumerate(dst_idx)}
        val = [0] * len(dst_idx)
        for c, k in zip(pres_src.syzygy.images[lp], src_idx):
            if not c:
                continue
            vk = pres_src.cover.gens[k]
            vidx = free_module_basis(q, pres_dst.cover.gens, vk)
            for coef, l in zip(f0[k], vidx):
                if coef:
                    val[pos[l]] += c * coef
        # solve d_b y = val with d_b: (P1)_b -> (P0)_b
        rel_idx = free_module_basis(q, pres_dst.rel, b)
        if not rel_idx:
            if any(val):
                raise RepresentationError("lift does not land in the syzygy")
            out.append([])
            continue
        cols = []
        for l in rel_idx:
            bl = pres_dst.rel[l]
            img = pres_dst.syzygy.images[l]
            src_pos = free_module_basis(q, pres_dst.cover.gens, bl)
            vec = [0] * len(dst_idx)
            for c, k in zip(img, src_pos):
                if c:
                    vec[pos[k]] += c
            cols.append(vec)
        dmat = la.transpose(cols, len(dst_idx))
        sol = la.solve(dmat, [[w] for w in val], len(rel_idx))
        if sol is None:
            raise RepresentationError("lift does not land in the syzygy")
        out.append([r[0] for r in sol])
    return out


def ext1_space(x: Representation, z: Representation) -> Ext1Space:
    return Ext1Space(x, z)


# ---------------------------------------------------------------------------
# Reflection functors


def _is_sink(x: Representation, v: int) -> bool:
    return x.quiver.is_sink(v)


def reflect_at(x: Representation, v: int) -> Representation:
    return reflect_with_data(x, v)[0]


def reflect_with_data(x: Representation, v: int):
    """BGP reflection at a sink (kernel) or source (cokernel).

    Returns ``(rep, data)`` where ``data`` carries the chosen kernel basis or
    cokernel projection and section, needed to reflect morphisms.
    """
    q = x.quiver
    r = q.reflect(v)
    if q.is_sink(v):
        ins = q.in_arrows(v)
        widths = [x.dim(a[0]) for a in ins]
        total = sum(widths)
        phi = la.hstack([x.maps[a] for a in ins], x.dim(v))
        if total == 0:
            kern = []
        elif x.dim(v) == 0:
            kern = la.identity(total)
        else:
            kern = la.nullspace(phi, total)
        kdim = len(kern)
        maps = {}
        for a in q.arrows:
            if a in ins:
                continue
            maps[a] = x.maps[a]
        off = 0
        for a, w in zip(ins, widths):
            # new arrow v -> a[0]: the a[0]-block of the kernel vectors
            maps[(v, a[0])] = [[kern[c][off + i] for c in range(kdim)] for i in range(w)]
            off += w
        dims = list(x.dims)
        dims[v - 1] = kdim
        return Representation(r, dims, maps), ("sink", kern, ins, widths)
    if q.is_source(v):
        outs = q.out_arrows(v)
        widths = [x.dim(a[1]) for a in outs]
        total = sum(widths)
        psi = la.vstack([x.maps[a] for a in outs])
        if total == 0:
            proj = []
        elif x.dim(v) == 0:
            proj = la.identity(total)
        else:
            proj = la.left_nullspace(psi, total)
        cdim = len(proj)
        section = la.right_inverse(proj, total) if cdim else []
        maps = {}
        for a in q.arrows:
            if a in outs:
                continue
            maps[a] = x.maps[a]
        off = 0
        for a, w in zip(outs, widths):
            maps[(a[1], v)] = [row[off:off + w] for row in proj] if cdim else []
            off += w
        dims = list(x.dims)
        dims[v - 1] = cdim
        return Representation(r, dims, maps), ("source", proj, section, outs, widths)
    raise RepresentationError(f"vertex {v} is neither a sink nor a source")


def reflect_morphism(f: Morphism, v: int, src_data, dst_data, new_src: Representation,
                     new_dst: Representation) -> Morphism:
    maps = {w: f.maps[w] for w in f.source.quiver.vertices if w != v}
    if src_data[0] == "sink":
        _, ks, ins, widths = src_data
        kd = dst_data[1]
        # (+f_j) K_src = K_dst g
        big = _block_diag([f.maps[a[0]] for a in ins], widths, [f.target.dim(a[0]) for a in ins])
        if ks and kd:
            lhs = la.matmul(big, la.transpose(ks), cols=len(ks))
            g = la.solve(la.transpose(kd), lhs, len(kd))
            if g is None:
                raise RepresentationError("reflected morphism does not exist")
        else:
            g = la.zeros(len(kd), len(ks))
        maps[v] = g
    else:
        _, ps, ss, outs, widths = src_data
        pd = dst_data[1]
        big = _block_diag([f.maps[a[1]] for a in outs], widths, [f.target.dim(a[1]) for a in outs])
        if ps and pd:
            g = la.matmul(la.matmul(pd, big, cols=len(ss)), ss, cols=len(ps))
        else:
            g = la.zeros(len(pd), len(ps))
        maps[v] = g
    return Morphism(new_src, new_dst, maps)


def _block_diag(blocks, widths, heights):
    rows = la.zeros(sum(heights), sum(widths))
    ro = co = 0
    for b, w, h in zip(blocks, widths, heights):
        for i in range(h):
            for j in range(w):
                rows[ro + i][co + j] = b[i][j]
        ro += h
        co += w
    return rows


def tau_minus(x: Representation) -> Representation | None:
    """``tau^{-1} X`` via the Coxeter functor; None flags an injective."""
    y = x
    for v in reversed(admissible_order(x.quiver)):
        y = reflect_at(y, v)
        if y.is_zero():
            return None
    return y


def tau_plus(x: Representation) -> Representation | None:
    """``tau X`` via the Coxeter functor; None flags a projective."""
    y = x
    for v in admissible_order(x.quiver):
        y = reflect_at(y, v)
        if y.is_zero():
            return None
    return y


def tau_minus_morphism(f: Morphism) -> Morphism:
    """Apply the inverse Coxeter functor to ``f``; zero objects are allowed."""
    s, t = f.source, f.target
    g = f
    for v in reversed(admissible_order(s.quiver)):
        s2, ds = reflect_with_data(s, v)
        t2, dt = reflect_with_data(t, v)
        g = reflect_morphism(g, v, ds, dt, s2, t2)
        s, t = s2, t2
    return g


def is_projective_dims(q: QuiverSpec, dims) -> bool:
    return any(tuple(projective_rep(q, a).dims) == tuple(dims) for a in q.vertices)


# ---------------------------------------------------------------------------
# Catalogue of indecomposables


class Catalogue:
    """One representative per positive root, generated from the projectives by ``tau^{-1}``.

    ``position[dim] = (a, t)`` records that the module is ``tau^{-t} P(a)``.
    """

    def __init__(self, q: QuiverSpec):
        self.quiver = q
        self.reps: Dict[tuple, Representation] = {}
        self.position: Dict[tuple, tuple[int, int]] = {}
        self.tau_inv: Dict[tuple, tuple | None] = {}
        for a in q.vertices:
            x = projective_rep(q, a)
            t = 0
            while x is not None:
                if x.dims in self.reps:
                    raise RepresentationError(f"dimension vector {x.dims} generated twice")
                self.reps[x.dims] = x
                self.position[x.dims] = (a, t)
                y = tau_minus(x)
                self.tau_inv[x.dims] = y.dims if y is not None else None
                x = y
                t += 1
        self.tau = {d: None for d in self.reps}
        for d, e in self.tau_inv.items():
            if e is not None:
                self.tau[e] = d
        self.order = sorted(self.reps)
        self.index = {d: i for i, d in enumerate(self.order)}
        self.projectives = {a: projective_rep(q, a).dims for a in q.vertices}
        self.injectives = {a: injective_rep(q, a).dims for a in q.vertices}
        self._pres: Dict[tuple, Presentation] = {}
        self._hom: Dict[tuple, tuple[int, int]] = {}

    def __len__(self):
        return len(self.reps)

    def __getitem__(self, d) -> Representation:
        return self.reps[tuple(d)]

    def is_projective(self, d) -> bool:
        return self.tau[tuple(d)] is None

    def is_injective(self, d) -> bool:
        return self.tau_inv[tuple(d)] is None

    def pres(self, d) -> Presentation:
        d = tuple(d)
        p = self._pres.get(d)
        if p is None:
            p = self._pres[d] = presentation(self.reps[d])
        return p

    def hom_ext(self, d, e) -> tuple[int, int]:
        """``(dim Hom(M_d, M_e), dim Ext^1(M_d, M_e))``, memoized."""
        key = (tuple(d), tuple(e))
        v = self._hom.get(key)
        if v is None:
            v = self._hom[key] = hom_ext_dims(self.pres(d), self.reps[key[1]])
        return v

    def hom(self, d, e) -> int:
        return self.hom_ext(d, e)[0]

    def ext(self, d, e) -> int:
        return self.hom_ext(d, e)[1]


@lru_cache(maxsize=None)
def catalogue(q: QuiverSpec) -> Catalogue:
    return Catalogue(q)


def enumerate_indecomposables(q: QuiverSpec) -> List[Representation]:
    c = catalogue(q)
    return [c.reps[d] for d in c.order]


def check_catalogue(q: QuiverSpec) -> None:
    c = catalogue(q)
    roots = positive_roots(q)
    if sorted(c.reps) != roots:
        raise RepresentationError("catalogue does not match the positive roots")
