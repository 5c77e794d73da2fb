"""Basic finite-dimensional algebras given by structure constants.

Conventions used throughout:

* every basis element ``b`` lives in one block ``e_tgt A e_src`` and is
  thought of as a map ``src -> tgt``;
* the product ``a * b`` is composition ``a o b`` ("first b, then a"), so it
  can be nonzero only when ``b.tgt == a.src``;
* left projectives are ``P(i) = A e_i`` (elements with source ``i``) and the
  Gabriel quiver has an arrow ``i -> j`` for each dimension of
  ``e_j (rad / rad^2) e_i``.

The algebras here are basic and split: ``e_i A e_i / e_i rad e_i`` is the
ground field for each idempotent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from . import linalg as la


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class BasisElement:
    src: int
    tgt: int
    degree: int = 0
    label: str = ""


@dataclass
class BasicAlgebra:
    """An algebra with basis, sparse structure constants and orthogonal idempotents.

    ``products[(a, b)]`` maps basis indices ``c`` to the coefficient of
    ``basis[c]`` in ``basis[a] * basis[b]``; missing pairs multiply to zero.
    ``idempotents[i]`` is the basis index of ``e_i``.  ``radical`` is a list of
    basis indices spanning the Jacobson radical; by default all
    non-idempotent basis elements.
    """

    n: int
    basis: List[BasisElement]
    products: Dict[Tuple[int, int], Dict[int, object]]
    idempotents: List[int]
    radical: List[int] | None = None
    name: str = ""

    def __post_init__(self):
        if self.radical is None:
            idem = set(self.idempotents)
            self.radical = [i for i in range(len(self.basis)) if i not in idem]

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- arithmetic ---------------------------------------------------------

    def unit_vector(self, i: int) -> list:
        v = [0] * self.dim
        v[i] = 1
        return v

    def mul(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.dim
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                prod = self.products.get((a, b))
                if prod:
                    f = xa * yb
                    for c, v in prod.items():
                        out[c] += f * v
        return out

    def mul_basis(self, a: int, b: int) -> list:
        out = [0] * self.dim
        for c, v in (self.products.get((a, b)) or {}).items():
            out[c] += v
        return out

    def block_of(self, x: Sequence) -> tuple[int, int] | None:
        """``(src, tgt)`` of a homogeneous element, None for zero; raises if mixed."""
        blk = None
        for c, v in enumerate(x):
            if v:
                b = self.basis[c]
                if blk is None:
                    blk = (b.src, b.tgt)
                elif blk != (b.src, b.tgt):
                    raise AlgebraError("element is not homogeneous")
        return blk

    def block_indices(self, src: int, tgt: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.src == src and b.tgt == tgt]

    def left_matrix(self, a: int) -> la.Matrix:
        """Matrix of ``y -> basis[a] * y``."""
        m = la.zeros(self.dim, self.dim)
        for b in range(self.dim):
            for c, v in (self.products.get((a, b)) or {}).items():
                m[c][b] += v
        return m

    def right_matrix(self, a: int) -> la.Matrix:
        """Matrix of ``x -> x * basis[a]``."""
        m = la.zeros(self.dim, self.dim)
        for b in range(self.dim):
            for c, v in (self.products.get((b, a)) or {}).items():
                m[c][b] += v
        return m

    # -- axioms -------------------------------------------------------------

    def check_associativity(self) -> list[tuple[int, int, int]]:
        """Basis triples where ``(ab)c != a(bc)``; empty when associative."""
        bad = []
        d = self.dim
        for a in range(d):
            for b in range(d):
                ab = self.products.get((a, b))
                for c in range(d):
                    bc = self.products.get((b, c))
                    if not ab and not bc:
                        continue
                    lhs: dict = {}
                    for k, v in (ab or {}).items():
                        for m, w in (self.products.get((k, c)) or {}).items():
                            lhs[m] = lhs.get(m, 0) + v * w
                    rhs: dict = {}
                    for k, v in (bc or {}).items():
                        for m, w in (self.products.get((a, k)) or {}).items():
                            rhs[m] = rhs.get(m, 0) + v * w
                    keys = set(lhs) | set(rhs)
                    if any(lhs.get(k, 0) != rhs.get(k, 0) for k in keys):
                        bad.append((a, b, c))
        return bad

    def check_idempotents(self) -> bool:
        """Orthogonal idempotents acting as identities on their blocks and summing to 1."""
        for i, ei in enumerate(self.idempotents):
            for j, ej in enumerate(self.idempotents):
                want = self.unit_vector(ei) if i == j else [0] * self.dim
                if self.mul_basis(ei, ej) != want:
                    return False
        for k, b in enumerate(self.basis):
            if self.mul_basis(self.idempotents[b.tgt], k) != self.unit_vector(k):
                return False
            if self.mul_basis(k, self.idempotents[b.src]) != self.unit_vector(k):
                return False
        return True

    def check_degrees(self) -> bool:
        """Products of two degree-1 elements vanish."""
        for (a, b), prod in self.products.items():
            if self.basis[a].degree == 1 and self.basis[b].degree == 1 and any(prod.values()):
                return False
        return True

    # -- Cartan data and radical layers --------------------------------------

    @cached_property
    def cartan(self) -> list[list[int]]:
        """``cartan[i][j] = dim e_j A e_i`` (elements ``i -> j``)."""
        m = [[0] * self.n for _ in range(self.n)]
        for b in self.basis:
            m[b.src][b.tgt] += 1
        return m

    @cached_property
    def radical_powers(self) -> list[list[list]]:
        """``[rad^1, rad^2, ...]`` as bases of homogeneous vectors, ending with the first zero power."""
        rad = [self.unit_vector(i) for i in self.radical]
        powers = [rad]
        cur = rad
        for _ in range(self.dim + 1):
            prods = []
            for x in cur:
                for r in self.radical:
                    y = self.mul(x, self.unit_vector(r))
                    if any(y):
                        prods.append(y)
            if prods:
                keep = la.column_basis(prods, self.dim)
                prods = [prods[i] for i in keep]
            powers.append(prods)
            if not prods:
                break
            cur = prods
        else:
            raise AlgebraError("radical is not nilpotent")
        return powers

    def is_radical_nilpotent(self) -> bool:
        try:
            return not self.radical_powers[-1]
        except AlgebraError:
            return False

    def _block_counts(self, vectors) -> dict:
        out: dict = {}
        for v in vectors:
            blk = self.block_of(v)
            out[blk] = out.get(blk, 0) + 1
        return out

    @cached_property
    def radical_layer_blocks(self) -> list[dict]:
        """Per radical power ``k >= 0``: block dims of ``rad^k / rad^{k+1}`` (rad^0 = A)."""
        full = self._block_counts([self.unit_vector(i) for i in range(self.dim)])
        pows = [full] + [self._block_counts(p) for p in self.radical_powers]
        layers = []
        for k in range(len(pows) - 1):
            cur, nxt = pows[k], pows[k + 1]
            layers.append({b: cur.get(b, 0) - nxt.get(b, 0) for b in cur if cur.get(b, 0) - nxt.get(b, 0)})
        return layers

    def loewy_layers_projective(self, i: int) -> list[int]:
        """Dimensions of the radical layers of the left projective ``P(i) = A e_i``."""
        out = []
        for layer in self.radical_layer_blocks:
            out.append(sum(v for (s, _), v in layer.items() if s == i))
        while out and out[-1] == 0:
            out.pop()
        return out

    def loewy_layers_right_projective(self, i: int) -> list[int]:
        """Radical layers of the right projective ``e_i A`` (dual to the left injective ``I(i)``)."""
        out = []
        for layer in self.radical_layer_blocks:
            out.append(sum(v for (_, t), v in layer.items() if t == i))
        while out and out[-1] == 0:
            out.pop()
        return out

    # -- Gabriel quiver -----------------------------------------------------

    @cached_property
    def gabriel_arrows(self) -> list[tuple[int, int, list]]:
        """``(i, j, representative)`` per arrow ``i -> j``; representatives lie in ``rad \\ rad^2``.

        Representatives are basis elements picked by pivoted elimination
        against ``rad^2`` in canonical basis order.
        """
        rad2 = self.radical_powers[1] if len(self.radical_powers) > 1 else []
        by_block: dict = {}
        for v in rad2:
            by_block.setdefault(self.block_of(v), []).append(v)
        arrows = []
        blocks = sorted({(self.basis[r].src, self.basis[r].tgt) for r in self.radical})
        for blk in blocks:
            sub = by_block.get(blk, [])
            cands = [self.unit_vector(r) for r in self.radical if (self.basis[r].src, self.basis[r].tgt) == blk]
            picked = la.column_basis(sub + cands, self.dim)
            for p in picked:
                if p >= len(sub):
                    arrows.append((blk[0], blk[1], cands[p - len(sub)]))
        return arrows

    def gabriel_quiver(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.gabriel_arrows]

    # -- socles and self-injectivity ------------------------------------------

    def _annihilated(self, idx: Sequence[int], side: str) -> list[list]:
        """Basis of ``{x in span(idx) : x * r = 0}`` (side 'right') or ``r * x = 0`` ('left')."""
        if not idx:
            return []
        rows = []
        for r in self.radical:
            for c in range(self.dim):
                row = []
                for k in idx:
                    prod = self.products.get((k, r) if side == "right" else (r, k))
                    row.append(prod.get(c, 0) if prod else 0)
                if any(row):
                    rows.append(row)
        null = la.nullspace(rows, len(idx)) if rows else la.identity(len(idx))
        out = []
        for v in null:
            x = [0] * self.dim
            for coef, k in zip(v, idx):
                x[k] = coef
            out.append(x)
        return out

    def right_socle_blocks(self) -> dict:
        """``{(src, tgt): dim}`` of the socle of ``A_A``."""
        out = {}
        for s in range(self.n):
            for t in range(self.n):
                k = len(self._annihilated(self.block_indices(s, t), "right"))
                if k:
                    out[(s, t)] = k
        return out

    def left_socle_blocks(self) -> dict:
        out = {}
        for s in range(self.n):
            for t in range(self.n):
                k = len(self._annihilated(self.block_indices(s, t), "left"))
                if k:
                    out[(s, t)] = k
        return out

    def projective_dims(self) -> list[int]:
        return [sum(self.cartan[i]) for i in range(self.n)]


def is_self_injective_algebra(alg: BasicAlgebra) -> bool:
    """The dual of ``A`` is projective, decided by a dimension count.

    ``top(D A) = D soc(A_A)``; its projective cover has dimension
    ``sum_j m_j dim P(j)`` which equals ``dim A`` exactly when ``D A`` is projective.
    """
    pdims = alg.projective_dims()
    total = 0
    for (s, _t), k in alg.right_socle_blocks().items():
        total += k * pdims[s]
    return total == alg.dim


def injectives_are_projective(alg: BasicAlgebra) -> bool:
    """Second route: each ``I(j)`` has a simple top ``S(i)`` and ``dim I(j) = dim P(i)``.

    The projective cover ``P(i) -> I(j)`` is then onto between spaces of equal
    dimension, hence an isomorphism.
    """
    pdims = alg.projective_dims()
    for j in range(alg.n):
        inj = left_injective(alg, j)
        tops = inj.top_generators()
        if len(tops) != 1 or pdims[tops[0][0]] != inj.dim:
            return False
    return True


def nakayama_permutation(alg: BasicAlgebra) -> list[int] | None:
    """``nu`` with ``soc P(i) = S(nu(i))``, or None if ``alg`` is not self-injective."""
    if not is_self_injective_algebra(alg):
        return None
    soc = alg.left_socle_blocks()
    perm = []
    for i in range(alg.n):
        tg = [t for (s, t), k in soc.items() if s == i for _ in range(k)]
        if len(tg) != 1:
            return None
        perm.append(tg[0])
    if sorted(perm) != list(range(alg.n)):
        return None
    return perm


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def is_nakayama(alg: BasicAlgebra) -> bool:
    for i in range(alg.n):
        if any(x > 1 for x in alg.loewy_layers_projective(i)):
            return False
        if any(x > 1 for x in alg.loewy_layers_right_projective(i)):
            return False
    return True


def kupisch_series(alg: BasicAlgebra) -> list[int] | None:
    """Loewy lengths of the projectives along the quiver cycle, or None if not Nakayama.

    The sequence starts at idempotent 0 and follows the arrow ``i -> i+1``
    with ``top(rad P(i)) = S(i+1)``.
    """
    if not is_nakayama(alg):
        return None
    succ: dict = {}
    for i, j in alg.gabriel_quiver():
        succ[i] = j
    order = [0]
    while len(order) < alg.n:
        nxt = succ.get(order[-1])
        if nxt is None or nxt in order:
            order = list(range(alg.n))
            break
        order.append(nxt)
    return [len(alg.loewy_layers_projective(i)) for i in order]


def is_special_biserial(alg: BasicAlgebra) -> bool:
    arrows = alg.gabriel_arrows
    for v in range(alg.n):
        if sum(1 for i, _, _ in arrows if i == v) > 2:
            return False
        if sum(1 for _, j, _ in arrows if j == v) > 2:
            return False
    for i, j, a in arrows:
        after = sum(1 for s, _, b in arrows if s == j and any(alg.mul(b, a)))
        before = sum(1 for _, t, c in arrows if t == i and any(alg.mul(a, c)))
        if after > 1 or before > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Algebras from quivers with monomial relations (for tests and templates)


def path_algebra_monomial(n: int, arrows: Sequence[tuple[int, int]], max_len: int | None = None,
                          zero_paths: Sequence[Sequence[int]] = (), name: str = "") -> BasicAlgebra:
    """``kQ / I`` for monomial ``I``: all paths avoiding the given zero subpaths.

    Paths are arrow-index sequences in traversal order; ``max_len`` kills all
    paths longer than it.  The path set must be finite.
    """
    zero = {tuple(p) for p in zero_paths}

    def allowed(p):
        if max_len is not None and len(p) > max_len:
            return False
        for i in range(len(p)):
            for j in range(i + 1, len(p) + 1):
                if tuple(p[i:j]) in zero:
                    return False
        return True

    # a longer nonzero path repeats a window of this width and can be pumped forever
    width = max([len(z) - 1 for z in zero] + [1])
    bound = len(arrows) ** width + width
    paths: list[tuple] = []
    basis: list[BasisElement] = []
    for v in range(n):
        paths.append((v, ()))
        basis.append(BasisElement(v, v, 0, f"e{v}"))
    frontier = [(v, ()) for v in range(n)]
    while frontier:
        nxt = []
        for start, p in frontier:
            end = arrows[p[-1]][1] if p else start
            for k, (s, t) in enumerate(arrows):
                if s == end and allowed(p + (k,)):
                    if max_len is None and len(p) + 1 > bound:
                        raise AlgebraError("relations leave infinitely many nonzero paths")
                    item = (start, p + (k,))
                    paths.append(item)
                    basis.append(BasisElement(start, t, 0, "".join(f"a{x}" for x in p + (k,))))
                    nxt.append(item)
        frontier = nxt
        if len(paths) > 10000:
            raise AlgebraError("path set is not finite")
    index = {p: i for i, p in enumerate(paths)}
    products: dict = {}
    for a, (sa, pa) in enumerate(paths):
        for b, (sb, pb) in enumerate(paths):
            end_b = arrows[pb[-1]][1] if pb else sb
            if end_b != sa:
                continue
            key = (sb, pb + pa)
            if key in index:
                products[(a, b)] = {index[key]: 1}
    return BasicAlgebra(n, basis, products, list(range(n)), name=name)


def nakayama_cycle_algebra(n: int, loewy: int) -> BasicAlgebra:
    """Cyclic Nakayama algebra with ``n`` vertices and all paths of length ``loewy`` zero."""
    arrows = [(i, (i + 1) % n) for i in range(n)]
    return path_algebra_monomial(n, arrows, max_len=loewy - 1, name=f"Nakayama({n},{loewy})")


def semisimple_algebra(n: int) -> BasicAlgebra:
    return path_algebra_monomial(n, [], name=f"k^{n}")


# ---------------------------------------------------------------------------
# Presentation templates


@dataclass
class PresentationTemplate:
    """Quiver with relations.

    ``arrows`` holds ``(name, src, tgt, kind)``; ``zero`` lists paths (arrow
    name sequences in traversal order) that vanish; ``commute`` lists pairs of
    parallel paths equal up to a nonzero scalar; ``forbidden_kinds`` are
    arrow-kind words excluded from normal-form paths (used only for counting).
    """

    family: str
    params: dict
    vertices: list[str]
    arrows: list[tuple[str, str, str, str]]
    zero: list[list[str]] = field(default_factory=list)
    commute: list[tuple[list[str], list[str]]] = field(default_factory=list)
    forbidden_kinds: list[tuple[str, ...]] = field(default_factory=list)

    @property
    def key(self) -> str:
        args = ",".join(str(v) for v in self.params.values())
        return f"{self.family}({args})"


def nakayama_template(n: int, loewy: int) -> PresentationTemplate:
    """Cycle ``v0 -> v1 -> ... -> v0`` with all paths of length ``loewy`` zero.

    For ``loewy == 1`` the arrows themselves vanish, so the quiver of the
    presented algebra has none.
    """
    verts = [f"v{i}" for i in range(n)]
    if loewy == 1:
        return PresentationTemplate("NakayamaCycle", {"n": n, "loewy_length": 1}, verts, [])
    arrows = [(f"a{i}", f"v{i}", f"v{(i + 1) % n}", "alpha") for i in range(n)]
    zero = [[f"a{(i + k) % n}" for k in range(loewy)] for i in range(n)]
    return PresentationTemplate("NakayamaCycle", {"n": n, "loewy_length": loewy}, verts, arrows,
                                zero=zero, forbidden_kinds=[("alpha",) * loewy])


def biserial_template(m: int) -> PresentationTemplate:
    """Vertices t_i, b_i; alpha_i: t_i -> t_{i+1}; beta: t_i -> b_i -> t_{i+m-1}.

    Relations: every alpha-beta and beta-alpha composite is zero and
    ``alpha^{m-1} = beta^2`` from each t_i.
    """
    verts = [f"t{i}" for i in range(m)] + [f"b{i}" for i in range(m)]
    arrows = []
    for i in range(m):
        arrows.append((f"alpha{i}", f"t{i}", f"t{(i + 1) % m}", "alpha"))
        arrows.append((f"beta{i}", f"t{i}", f"b{i}", "beta_in"))
        arrows.append((f"gamma{i}", f"b{i}", f"t{(i + m - 1) % m}", "beta_out"))
    zero = []
    commute = []
    for i in range(m):
        zero.append([f"alpha{i}", f"beta{(i + 1) % m}"])
        zero.append([f"gamma{i}", f"alpha{(i + m - 1) % m}"])
        commute.append(([f"alpha{(i + k) % m}" for k in range(m - 1)], [f"beta{i}", f"gamma{i}"]))
    forbidden = [("alpha", "beta_in"), ("beta_out", "alpha"), ("beta_in", "beta_out"), ("alpha",) * m]
    return PresentationTemplate("BiserialD2m", {"m": m}, verts, arrows, zero=zero, commute=commute,
                                forbidden_kinds=forbidden)


def template_normal_paths(tmpl: PresentationTemplate) -> list[tuple[str, ...]]:
    """Normal-form paths (including trivial ones) of a template.

    A path is kept when no factor of its kind word is forbidden; for the two
    families here the forbidden words form a confluent rewriting system, so
    these paths are a basis of the algebra.
    """
    kinds = {a[0]: a[3] for a in tmpl.arrows}
    out_of: dict = {}
    for name, s, t, _ in tmpl.arrows:
        out_of.setdefault(s, []).append((name, t))
    forb = [tuple(f) for f in tmpl.forbidden_kinds]

    def ok(word):
        for f in forb:
            k = len(f)
            if len(word) >= k and tuple(word[-k:]) == f:
                return False
        return True

    paths = [((v,), v) for v in tmpl.vertices]
    out = [p for p, _ in paths]
    frontier = paths
    while frontier:
        nxt = []
        for p, end in frontier:
            for name, t in out_of.get(end, []):
                q = p + (name,)
                word = [kinds[x] for x in q[1:]]
                if ok(word):
                    nxt.append((q, t))
                    out.append(q)
        frontier = nxt
        if len(out) > 100000:
            raise AlgebraError("template has infinitely many normal paths")
    return out


def template_dimension(tmpl: PresentationTemplate) -> int:
    return len(template_normal_paths(tmpl))


@dataclass
class MatchReport:
    template: str
    matched: bool
    reason: str = ""
    vertex_map: dict | None = None
    scalars: list | None = None
    loewy_exponent: int | None = None

    def as_dict(self) -> dict:
        return {
            "template": self.template,
            "matched": self.matched,
            "reason": self.reason,
            "vertex_map": self.vertex_map,
            "scalars": [str(s) for s in self.scalars] if self.scalars is not None else None,
        }


def _path_value(alg: BasicAlgebra, reps: dict, path: Sequence[str]) -> list:
    x = None
    for name in path:
        a = reps[name]
        x = a if x is None else alg.mul(a, x)
    return x


def _proportional(u: Sequence, v: Sequence):
    """``c`` with ``u = c v`` (both nonzero), else None."""
    c = None
    for x, y in zip(u, v):
        if y:
            r = la.Fraction(x) / y
            if c is None:
                c = r
            elif r != c:
                return None
        elif x:
            return None
    if c is None or c == 0:
        return None
    return la._normalize(c)


def matches_presentation(alg: BasicAlgebra, tmpl: PresentationTemplate, max_isos: int = 64) -> MatchReport:
    """Try to realize ``tmpl`` as a presentation of ``alg``.

    Maps template arrows to the Gabriel-arrow representatives along a quiver
    isomorphism, checks every relation (commutativity relations up to a
    nonzero scalar, reported), and checks that the images of the normal-form
    paths form a basis of ``alg``.
    """
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    arrows = alg.gabriel_arrows
    pairs = [(i, j) for i, j, _ in arrows]
    if len(set(pairs)) != len(pairs):
        return MatchReport(tmpl.key, False, "quiver has multiple arrows")
    if len(tmpl.vertices) != alg.n or len(tmpl.arrows) != len(arrows):
        return MatchReport(tmpl.key, False, "quiver sizes differ")
    g_t = nx.DiGraph()
    g_t.add_nodes_from(tmpl.vertices)
    g_t.add_edges_from((s, t) for _, s, t, _ in tmpl.arrows)
    g_a = nx.DiGraph()
    g_a.add_nodes_from(range(alg.n))
    g_a.add_edges_from(pairs)
    rep_of = {(i, j): r for i, j, r in arrows}
    normal = template_normal_paths(tmpl)
    if len(normal) != alg.dim:
        return MatchReport(tmpl.key, False, f"dimension {alg.dim} != template dimension {len(normal)}")
    # the matcher's enumeration order depends on hashing; sort for determinism
    isos = []
    for iso in DiGraphMatcher(g_t, g_a).isomorphisms_iter():
        isos.append(iso)
        if len(isos) > max_isos:
            raise AlgebraError("too many quiver isomorphisms to try")
    isos.sort(key=lambda m: [m[v] for v in tmpl.vertices])
    reason = "quiver not isomorphic to template quiver"
    for iso in isos:
        reps = {name: rep_of[(iso[s], iso[t])] for name, s, t, _ in tmpl.arrows}
        if any(any(_path_value(alg, reps, p)) for p in tmpl.zero):
            reason = "a zero relation fails"
            continue
        scalars = []
        for lhs, rhs in tmpl.commute:
            c = _proportional(_path_value(alg, reps, lhs), _path_value(alg, reps, rhs))
            if c is None:
                break
            scalars.append(c)
        else:
            images = []
            for p in normal:
                if len(p) == 1:
                    images.append(alg.unit_vector(alg.idempotents[iso[p[0]]]))
                else:
                    images.append(_path_value(alg, reps, p[1:]))
            if la.span_rank(images) != alg.dim:
                reason = "normal paths do not span"
                continue
            return MatchReport(tmpl.key, True, "", {k: v for k, v in sorted(iso.items())}, scalars)
        reason = "a commutativity relation fails"
    return MatchReport(tmpl.key, False, reason)


def loewy_exponent(alg: BasicAlgebra) -> int | None:
    """Smallest ``l`` such that all paths of ``l`` Gabriel arrows vanish (``rad^l = 0``)."""
    pows = alg.radical_powers
    for k, p in enumerate(pows, start=1):
        if not p:
            return k
    return None


# ---------------------------------------------------------------------------
# Modules over a basic algebra (for Ext computations)


class AlgModule:
    """Left module: ``action[b]`` is the matrix of the basis element ``b``."""

    def __init__(self, alg: BasicAlgebra, dim: int, action: list):
        self.alg = alg
        self.dim = dim
        self.action = action

    def idempotent_part(self, i: int) -> list[list]:
        """Basis of ``e_i M`` as column vectors."""
        if self.dim == 0:
            return []
        m = self.action[self.alg.idempotents[i]]
        cols = la.transpose(m)
        keep = la.column_basis(cols, self.dim)
        return [cols[k] for k in keep]

    def radical_vectors(self) -> list[list]:
        vecs = []
        for r in self.alg.radical:
            cols = la.transpose(self.action[r], self.dim) if self.dim else []
            vecs.extend(c for c in cols if any(c))
        if vecs:
            vecs = [vecs[i] for i in la.column_basis(vecs, self.dim)]
        return vecs

    def top_generators(self) -> list[tuple[int, list]]:
        """``(i, m)`` with ``m in e_i M`` spanning ``M / rad M``."""
        rad = self.radical_vectors()
        span = list(rad)
        gens = []
        for i in range(self.alg.n):
            for v in self.idempotent_part(i):
                if la.span_rank(span + [v]) > len(span):
                    span.append(v)
                    gens.append((i, v))
        return gens

    def submodule(self, vectors: list[list]) -> "AlgModule":
        """The submodule with the given basis (assumed stable under the action)."""
        k = len(vectors)
        if k == 0:
            return AlgModule(self.alg, 0, [[] for _ in range(self.alg.dim)])
        basis_mat = la.transpose(vectors, self.dim)
        action = []
        for b in range(self.alg.dim):
            img = la.matmul(self.action[b], basis_mat, cols=k)
            x = la.solve(basis_mat, img, k)
            if x is None:
                raise AlgebraError("subspace is not a submodule")
            action.append(x)
        return AlgModule(self.alg, k, action)


def left_projective(alg: BasicAlgebra, i: int) -> tuple[AlgModule, list[int]]:
    """``P(i) = A e_i`` and the basis indices spanning it."""
    idx = [k for k, b in enumerate(alg.basis) if b.src == i]
    pos = {k: p for p, k in enumerate(idx)}
    action = []
    for a in range(alg.dim):
        m = la.zeros(len(idx), len(idx))
        for p, k in enumerate(idx):
            for c, v in (alg.products.get((a, k)) or {}).items():
                m[pos[c]][p] += v
        action.append(m)
    return AlgModule(alg, len(idx), action), idx


def left_injective(alg: BasicAlgebra, j: int) -> AlgModule:
    """``I(j) = D(e_j A)`` with ``(a . phi)(x) = phi(x a)``."""
    idx = [k for k, b in enumerate(alg.basis) if b.tgt == j]
    pos = {k: p for p, k in enumerate(idx)}
    action = []
    for a in range(alg.dim):
        # right multiplication x -> x * a on e_j A, then transpose
        m = la.zeros(len(idx), len(idx))
        for p, k in enumerate(idx):
            for c, v in (alg.products.get((k, a)) or {}).items():
                m[pos[c]][p] += v
        action.append(la.transpose(m, len(idx)) if idx else [])
    return AlgModule(alg, len(idx), action)


def projective_cover_map(mod: AlgModule) -> tuple[list[int], la.Matrix, list[list]]:
    """``(gens, matrix, gen_vectors)``: the map ``+P(gens) -> M`` in the path-basis coordinates."""
    alg = mod.alg
    tops = mod.top_generators()
    cols = []
    for i, m in tops:
        _, idx = left_projective(alg, i)
        for k in idx:
            cols.append(la.matvec(mod.action[k], m))
    return [i for i, _ in tops], la.transpose(cols, mod.dim) if cols else [[] for _ in range(mod.dim)], [m for _, m in tops]


def free_module(alg: BasicAlgebra, gens: Sequence[int]) -> AlgModule:
    mods = [left_projective(alg, i)[0] for i in gens]
    dim = sum(m.dim for m in mods)
    action = []
    for a in range(alg.dim):
        mat = la.zeros(dim, dim)
        off = 0
        for m in mods:
            for r in range(m.dim):
                for c in range(m.dim):
                    mat[off + r][off + c] = m.action[a][r][c]
            off += m.dim
        action.append(mat)
    return AlgModule(alg, dim, action)


@dataclass
class Resolution:
    """Minimal projective resolution; ``diffs[k]`` maps ``Q_{k+1} -> Q_k`` (path-basis coordinates)."""

    gens: list[list[int]]
    diffs: list[la.Matrix]


def minimal_resolution(mod: AlgModule, length: int = 3) -> Resolution:
    alg = mod.alg
    gens0, cover, _ = projective_cover_map(mod)
    gens = [gens0]
    diffs = []
    q_prev = free_module(alg, gens0)
    kernel_basis = la.nullspace(cover, q_prev.dim) if mod.dim else la.identity(q_prev.dim)
    for _ in range(length):
        if not kernel_basis:
            break
        k = q_prev.submodule(kernel_basis)
        g, m, _ = projective_cover_map(k)
        # the cover lands in K; push it into Q_prev coordinates
        kb = la.transpose(kernel_basis, q_prev.dim)
        d = la.matmul(kb, m, cols=len(m[0]) if m and m[0] else 0)
        q_next = free_module(alg, g)
        gens.append(g)
        diffs.append(d)
        kernel_basis = la.nullspace(d, q_next.dim) if d and q_next.dim else (la.identity(q_next.dim) if q_next.dim else [])
        q_prev = q_next
    return Resolution(gens, diffs)


def ext_dim(mod: AlgModule, target: AlgModule, degree: int) -> int:
    """``dim Ext^degree_A(M, N)`` from a minimal projective resolution of ``M``."""
    alg = mod.alg
    res = minimal_resolution(mod, length=degree + 1)
    if degree >= len(res.gens):
        return 0

    def cochain_map(k: int) -> tuple[la.Matrix, int, int]:
        # Hom(Q_k, N) -> Hom(Q_{k+1}, N), phi -> phi o d_k
        src_gens = res.gens[k]
        dst_gens = res.gens[k + 1] if k + 1 < len(res.gens) else []
        src_parts = [target.idempotent_part(i) for i in src_gens]
        dst_parts = [target.idempotent_part(i) for i in dst_gens]
        ncols = sum(len(p) for p in src_parts)
        nrows = sum(len(p) for p in dst_parts)
        if not dst_gens or k >= len(res.diffs):
            return [], ncols, nrows
        d = res.diffs[k]
        # columns of d: generator images of Q_{k+1} inside Q_k (path-basis coordinates)
        src_idx = [[kk for kk, b in enumerate(alg.basis) if b.src == i] for i in src_gens]
        offs = []
        o = 0
        for idx in src_idx:
            offs.append(o)
            o += len(idx)
        dst_offs = []
        o = 0
        for i in dst_gens:
            dst_offs.append(o)
            o += len([kk for kk, b in enumerate(alg.basis) if b.src == i])
        mat = la.zeros(nrows, ncols)
        row_off = 0
        for h, i_h in enumerate(dst_gens):
            # image of the generator e_{i_h} of the h-th summand
            e_pos = [kk for kk, b in enumerate(alg.basis) if b.src == i_h].index(alg.idempotents[i_h])
            col = [row[dst_offs[h] + e_pos] for row in d]
            basis_h = dst_parts[h]
            col_off = 0
            for g, idx in enumerate(src_idx):
                comp = col[offs[g]: offs[g] + len(idx)]
                for t, n_vec in enumerate(src_parts[g]):
                    # phi sends generator g to n_vec; value on comp = sum_y comp_y * y . n_vec
                    val = [0] * target.dim
                    for coef, y in zip(comp, idx):
                        if coef:
                            yv = la.matvec(target.action[y], n_vec)
                            val = [a + coef * b for a, b in zip(val, yv)]
                    coords = la.coordinates(basis_h, val) if basis_h else ([] if not any(val) else None)
                    if coords is None:
                        raise AlgebraError("value outside e_i N")
                    for r, cv in enumerate(coords):
                        mat[row_off + r][col_off + t] = cv
                col_off += len(src_parts[g])
            row_off += len(basis_h)
        return mat, ncols, nrows

    m_in, c_in, r_in = cochain_map(degree - 1) if degree >= 1 else ([], 0, 0)
    m_out, c_out, r_out = cochain_map(degree)
    dim_here = c_out
    rank_out = la.rank(m_out) if m_out and c_out else 0
    rank_in = la.rank(m_in) if m_in and c_in else 0
    return dim_here - rank_out - rank_in
