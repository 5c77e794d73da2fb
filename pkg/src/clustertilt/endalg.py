"""Endomorphism algebras of cluster-tilting objects.

For a cluster-tilting object ``T`` made only of modules,
``End_C(T) = Hom_H(T, T) + Hom_D(T, F T)`` with ``F = tau^{-1}[1]`` and
``Hom_D(T_i, F T_j) = Ext^1_H(T_i, tau^{-1} T_j)``.  The second summand is
the degree-1 part; it squares to zero, and it is a bimodule over the first
part via pullback and pushforward along ``tau^{-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import BasicAlgebra, BasisElement, ext_dim, left_injective, left_projective
from .cluster import ClusterCategory, CObject, cluster_category, transport_labels
from .dynkin import QuiverSpec
from .reps import Ext1Space, hom_basis, identity_morphism, morphism_coordinates, tau_minus, tau_minus_morphism


class EndAlgebraError(RuntimeError):
    pass


@dataclass
class NormalizedTilting:
    """``T`` rewritten as a module over some orientation.

    ``shift`` is the power ``k`` of ``tau_c`` applied first, ``sinks`` the
    sink reflections applied afterwards.  Both are triangle equivalences, so
    ``End_C`` is unchanged.
    """

    quiver: QuiverSpec
    objects: tuple
    shift: int
    sinks: list

    @property
    def category(self) -> ClusterCategory:
        return cluster_category(self.quiver)


def _orientations_by_distance(q: QuiverSpec) -> list[tuple[QuiverSpec, list[int]]]:
    """All orientations with a shortest sink sequence from ``q``, nearest first."""
    out = [(q, [])]
    seen = {q.arrows}
    frontier = [(q, [])]
    while frontier:
        nxt = []
        for p, seq in frontier:
            for v in p.vertices:
                if p.is_sink(v):
                    r = p.reflect(v)
                    if r.arrows not in seen:
                        seen.add(r.arrows)
                        nxt.append((r, seq + [v]))
        out.extend(nxt)
        frontier = nxt
    return out


def normalize_to_modules(c: ClusterCategory, t: Sequence[CObject]) -> NormalizedTilting:
    """Move ``T`` to a module-only object by ``tau_c`` powers, then by reorientation."""
    t = tuple(sorted(t))
    if all(x.is_module for x in t):
        return NormalizedTilting(c.quiver, t, 0, [])
    period = c.tau_period
    for _, seq in _orientations_by_distance(c.quiver):
        for k in range(period):
            shifted = [c.tau_power(x, k) for x in t]
            q3, moved = transport_labels(c.quiver, seq, shifted)
            if all(x.is_module for x in moved):
                return NormalizedTilting(q3, tuple(sorted(moved)), k, list(seq))
    raise EndAlgebraError(f"no module-only form of {[str(x) for x in t]}")


@dataclass
class EndAlgebraData:
    algebra: BasicAlgebra
    objects: tuple
    quiver: QuiverSpec
    hom_dims: list
    ext_dims: list


def build_end_algebra(c: ClusterCategory, t: Sequence[CObject], check: bool = True) -> EndAlgebraData:
    """Structure constants of ``End_C(T)`` for a module-only cluster-tilting ``T``.

    Idempotent ``i`` is the summand ``T_i`` in canonical label order; a basis
    element ``i -> j`` is a morphism ``T_i -> T_j`` of C.
    """
    t = tuple(sorted(t))
    if not all(x.is_module for x in t):
        raise EndAlgebraError("normalize the tilting object to modules first")
    cat = c.cat
    n = len(t)
    mods = [cat[x.dim] for x in t]
    taus = [tau_minus(m) for m in mods]

    homs = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                b = hom_basis(mods[i], mods[i])
                if len(b) != 1:
                    raise EndAlgebraError("summand is not a brick")
                homs[i][j] = [identity_morphism(mods[i])]
            else:
                homs[i][j] = hom_basis(mods[i], mods[j])
    exts = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if taus[j] is not None:
                e = Ext1Space(mods[i], taus[j], cat.pres(t[i].dim))
                exts[i][j] = e if e.dim else None

    basis: list[BasisElement] = []
    index0: dict = {}
    index1: dict = {}
    idem = [0] * n
    for i in range(n):
        for j in range(n):
            for k in range(len(homs[i][j])):
                index0[(i, j, k)] = len(basis)
                if i == j:
                    idem[i] = len(basis)
                basis.append(BasisElement(i, j, 0, f"h{i}{j}_{k}"))
            if exts[i][j] is not None:
                for k in range(exts[i][j].dim):
                    index1[(i, j, k)] = len(basis)
                    basis.append(BasisElement(i, j, 1, f"x{i}{j}_{k}"))

    products: dict = {}

    def put(a, b, coords, table, i, k):
        d = {}
        for r, v in enumerate(coords):
            if v:
                d[table[(i, k, r)]] = v
        if d:
            products[(a, b)] = d

    tau_hom: dict = {}
    for j in range(n):
        for k in range(n):
            for s, g in enumerate(homs[j][k]):
                # g: T_j -> T_k; y: T_i -> T_j; product g * y
                for i in range(n):
                    for r, y in enumerate(homs[i][j]):
                        comp = g.compose(y)
                        coords = morphism_coordinates(homs[i][k], comp)
                        put(index0[(j, k, s)], index0[(i, j, r)], coords, index0, i, k)
                    # x in Hom_D(T_i, F T_j), product g * x = push along tau^{-1} g
                    if exts[i][j] is not None and exts[i][k] is not None:
                        key = (j, k, s)
                        if key not in tau_hom:
                            tau_hom[key] = tau_minus_morphism(g)
                        m = exts[i][j].pushforward(tau_hom[key], exts[i][k])
                        for r in range(exts[i][j].dim):
                            put(index0[(j, k, s)], index1[(i, j, r)], [row[r] for row in m], index1, i, k)
            # x in Hom_D(T_j, F T_k), y: T_i -> T_j; product x * y = pull back along y
            if exts[j][k] is not None:
                for i in range(n):
                    if exts[i][k] is None:
                        continue
                    for r, y in enumerate(homs[i][j]):
                        m = exts[j][k].pullback(y, exts[i][k])
                        for s in range(exts[j][k].dim):
                            put(index1[(j, k, s)], index0[(i, j, r)], [row[s] for row in m], index1, i, k)

    alg = BasicAlgebra(n, basis, products, idem, name="End_C(T)")
    hom_dims = [[len(homs[i][j]) for j in range(n)] for i in range(n)]
    ext_dims = [[exts[i][j].dim if exts[i][j] is not None else 0 for j in range(n)] for i in range(n)]
    if check:
        for i in range(n):
            for j in range(n):
                want = c.hom_c_dim(t[i], t[j])
                if alg.cartan[i][j] != want:
                    raise EndAlgebraError(f"block ({i},{j}) has dim {alg.cartan[i][j]}, Hom_C gives {want}")
        if not alg.check_idempotents():
            raise EndAlgebraError("idempotents are wrong")
    return EndAlgebraData(alg, t, c.quiver, hom_dims, ext_dims)


def end_algebra(c: ClusterCategory, t: Sequence[CObject], check: bool = True) -> EndAlgebraData:
    """Normalize ``T`` if needed and build ``End_C(T)``."""
    norm = normalize_to_modules(c, t)
    return build_end_algebra(norm.category, norm.objects, check=check)


def tilted_algebra(c: ClusterCategory, t: Sequence[CObject]) -> BasicAlgebra:
    """``End_H(T)``: the degree-0 subalgebra."""
    data = build_end_algebra(c, t, check=False)
    full = data.algebra
    keep = [k for k, b in enumerate(full.basis) if b.degree == 0]
    pos = {k: p for p, k in enumerate(keep)}
    products = {}
    for (a, b), prod in full.products.items():
        if a in pos and b in pos:
            d = {pos[c]: v for c, v in prod.items() if c in pos}
            if d:
                products[(pos[a], pos[b])] = d
    return BasicAlgebra(full.n, [full.basis[k] for k in keep], products,
                        [pos[e] for e in full.idempotents], name="End_H(T)")


def ext2_bimodule_dims(a: BasicAlgebra) -> list[list[int]]:
    """``m[i][j] = dim Ext^2_A(I(j), P(i))`` for left ``A``-modules.

    Indexed like the Cartan matrix, so that the trivial extension of ``A`` by
    ``Ext^2_A(DA, A)`` has Cartan matrix ``cartan(A) + m``.
    """
    proj = [left_projective(a, i)[0] for i in range(a.n)]
    inj = [left_injective(a, j) for j in range(a.n)]
    return [[ext_dim(inj[j], proj[i], 2) for j in range(a.n)] for i in range(a.n)]


@dataclass
class TrivialExtensionCheck:
    dim_gamma: int
    dim_tilted: int
    ext2_total: int
    cartan_ok: bool

    @property
    def ok(self) -> bool:
        return self.cartan_ok and self.dim_gamma == self.dim_tilted + self.ext2_total

    def as_dict(self) -> dict:
        return {"dim_gamma": self.dim_gamma, "dim_tilted": self.dim_tilted,
                "ext2_total": self.ext2_total, "cartan_ok": self.cartan_ok, "ok": self.ok}


def trivial_extension_check(c: ClusterCategory, t: Sequence[CObject]) -> TrivialExtensionCheck:
    """Compare ``End_C(T)`` with ``A + Ext^2_A(DA, A)`` for ``A = End_H(T)``.

    ``T`` is first normalized to a tilting module; the two sides are computed
    independently (cluster Hom tables versus resolutions over ``A``).
    """
    norm = normalize_to_modules(c, t)
    cc = norm.category
    gamma = build_end_algebra(cc, norm.objects).algebra
    a = tilted_algebra(cc, norm.objects)
    m = ext2_bimodule_dims(a)
    n = a.n
    cartan_ok = all(gamma.cartan[i][j] == a.cartan[i][j] + m[i][j] for i in range(n) for j in range(n))
    return TrivialExtensionCheck(gamma.dim, a.dim, sum(map(sum, m)), cartan_ok)
