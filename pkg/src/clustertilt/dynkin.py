"""Simply-laced Dynkin quivers, dimension vectors and Coxeter combinatorics.

Vertex numbering is fixed per type:

* ``A_n``: the path 1 - 2 - ... - n.
* ``D_n``: edges 1-3, 2-3, 3-4, ..., (n-1)-n; vertices 1 and 2 are the two
  short-arm leaves and 3 is the branch vertex (for n = 3 the diagram is the
  path 1 - 3 - 2, i.e. ``A_3``).
* ``E_n``: Bourbaki numbering, edges 1-3, 3-4, 4-5, ..., (n-1)-n and 2-4.

Vertices are 1-based everywhere in the public API; a dimension vector is a
tuple whose ``v - 1`` entry is the dimension at vertex ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

DimVector = tuple

COXETER_NUMBERS = {"E": {6: 12, 7: 18, 8: 30}}


class DynkinError(ValueError):
    """Invalid Dynkin type, rank or orientation."""


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise DynkinError(f"unsupported family {self.family!r}")
        n = self.rank
        if not isinstance(n, int) or n < 1:
            raise DynkinError(f"rank must be a positive integer, got {n!r}")
        if self.family == "D" and n < 3:
            raise DynkinError("type D needs rank >= 3")
        if self.family == "E" and n not in (6, 7, 8):
            raise DynkinError("type E needs rank 6, 7 or 8")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def coxeter_number(self) -> int:
        n = self.rank
        if self.family == "A":
            return n + 1
        if self.family == "D":
            return 2 * n - 2
        return COXETER_NUMBERS["E"][n]

    @property
    def root_count(self) -> int:
        n = self.rank
        return n * self.coxeter_number // 2


def dynkin_edges(t: DynkinType) -> tuple[tuple[int, int], ...]:
    n = t.rank
    if t.family == "A":
        return tuple((i, i + 1) for i in range(1, n))
    if t.family == "D":
        if n == 3:
            return ((1, 3), (2, 3))
        return ((1, 3), (2, 3)) + tuple((i, i + 1) for i in range(3, n))
    return ((1, 3), (2, 4)) + tuple((i, i + 1) for i in range(3, n))


@dataclass(frozen=True)
class QuiverSpec:
    """A Dynkin diagram together with an orientation of each edge.

    ``arrows`` lists ``(source, target)`` pairs, one per edge, in edge order.
    """

    dynkin: DynkinType
    arrows: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.dynkin.rank

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return dynkin_edges(self.dynkin)

    @property
    def orientation(self) -> tuple[int, ...]:
        """Per-edge direction: +1 when the arrow goes from the smaller to the larger endpoint."""
        return tuple(1 if s < t else -1 for s, t in self.arrows)

    @property
    def orientation_key(self) -> str:
        return "".join("+" if d > 0 else "-" for d in self.orientation)

    def out_arrows(self, v: int) -> list[tuple[int, int]]:
        return [a for a in self.arrows if a[0] == v]

    def in_arrows(self, v: int) -> list[tuple[int, int]]:
        return [a for a in self.arrows if a[1] == v]

    def neighbors(self, v: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})

    def is_sink(self, v: int) -> bool:
        return not self.out_arrows(v)

    def is_source(self, v: int) -> bool:
        return not self.in_arrows(v)

    def reflect(self, v: int) -> "QuiverSpec":
        """Reverse every arrow at ``v`` (the orientation of the BGP reflection at ``v``)."""
        arrows = tuple((t, s) if v in (s, t) else (s, t) for s, t in self.arrows)
        return QuiverSpec(self.dynkin, arrows)

    def opposite(self) -> "QuiverSpec":
        return QuiverSpec(self.dynkin, tuple((t, s) for s, t in self.arrows))

    @cached_property
    def paths(self) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
        """The unique path (as an arrow sequence) between every connected ordered pair.

        The underlying graph is a tree, so there is at most one path ``u -> ... -> w``.
        """
        out = {}
        for u in self.vertices:
            out[(u, u)] = ()
            stack = [(u, ())]
            while stack:
                v, p = stack.pop()
                for a in self.out_arrows(v):
                    q = p + (a,)
                    out[(u, a[1])] = q
                    stack.append((a[1], q))
        return out

    def has_path(self, u: int, w: int) -> bool:
        return (u, w) in self.paths

    def __str__(self):
        return f"{self.dynkin}[{self.orientation_key}]"


def build_dynkin(family: str | DynkinType, rank: int | None = None,
                 orientation: str | Sequence[int] = "default") -> QuiverSpec:
    """Build an oriented Dynkin quiver.

    ``orientation`` is ``"default"`` (every arrow toward the higher index), a
    sequence of ``+1/-1`` per edge, or a string of ``+``/``-`` characters.
    """
    t = family if isinstance(family, DynkinType) else DynkinType(family, rank)
    edges = dynkin_edges(t)
    if isinstance(orientation, str) and orientation == "default":
        dirs = [1] * len(edges)
    elif isinstance(orientation, str):
        if any(c not in "+-" for c in orientation):
            raise DynkinError(f"bad orientation string {orientation!r}")
        dirs = [1 if c == "+" else -1 for c in orientation]
    else:
        dirs = list(orientation)
    if len(dirs) != len(edges) or any(d not in (1, -1) for d in dirs):
        raise DynkinError(f"orientation must give +1/-1 for each of the {len(edges)} edges")
    arrows = tuple((a, b) if d > 0 else (b, a) for (a, b), d in zip(edges, dirs))
    return QuiverSpec(t, arrows)


def all_orientations(t: DynkinType) -> list[QuiverSpec]:
    m = len(dynkin_edges(t))
    out = []
    for mask in range(2 ** m):
        dirs = [1 if not (mask >> i) & 1 else -1 for i in range(m)]
        out.append(build_dynkin(t, orientation=dirs))
    return out


def _check(q: QuiverSpec, *vs: Sequence[int]):
    for v in vs:
        if len(v) != q.n:
            raise DynkinError(f"dimension vector {tuple(v)} has length {len(v)}, expected {q.n}")


def euler_form(q: QuiverSpec, d: Sequence[int], e: Sequence[int]) -> int:
    _check(q, d, e)
    val = sum(x * y for x, y in zip(d, e))
    for s, t in q.arrows:
        val -= d[s - 1] * e[t - 1]
    return val


def symmetric_form(q: QuiverSpec, d: Sequence[int], e: Sequence[int]) -> int:
    return euler_form(q, d, e) + euler_form(q, e, d)


def euler_matrix(q: QuiverSpec) -> list[list[int]]:
    n = q.n
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        m[s - 1][t - 1] -= 1
    return m


def unit(n: int, v: int) -> DimVector:
    return tuple(int(i == v - 1) for i in range(n))


def simple_reflection(q: QuiverSpec, v: int, d: Sequence[int]) -> DimVector:
    """``s_v(d) = d - (d, e_v) e_v`` for the symmetrized Euler form."""
    x = 2 * d[v - 1] - sum(d[w - 1] for w in q.neighbors(v))
    out = list(d)
    out[v - 1] -= x
    return tuple(out)


def positive_roots(q: QuiverSpec) -> list[DimVector]:
    """Positive roots by closing the simple roots under simple reflections.

    Returned sorted lexicographically.
    """
    n = q.n
    roots = {unit(n, v) for v in q.vertices}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for v in q.vertices:
                s = simple_reflection(q, v, r)
                if all(x >= 0 for x in s) and any(s) and s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(roots)


def admissible_order(q: QuiverSpec) -> tuple[int, ...]:
    """Sink-first admissible ordering; ties broken by the larger vertex first."""
    order = []
    cur = q
    remaining = set(q.vertices)
    while remaining:
        sinks = [v for v in sorted(remaining, reverse=True) if cur.is_sink(v)]
        if not sinks:
            raise DynkinError("orientation has no admissible ordering")
        v = sinks[0]
        order.append(v)
        remaining.discard(v)
        cur = cur.reflect(v)
    return tuple(order)


def coxeter_transform(q: QuiverSpec, d: Sequence[int]) -> DimVector:
    """Apply ``s_{i_n} ... s_{i_1}`` for the admissible order ``i_1, ..., i_n``.

    On the dimension vector of a non-projective indecomposable this is the
    dimension vector of its Auslander-Reiten translate.
    """
    out = tuple(d)
    for v in admissible_order(q):
        out = simple_reflection(q, v, out)
    return out


def inverse_coxeter_transform(q: QuiverSpec, d: Sequence[int]) -> DimVector:
    out = tuple(d)
    for v in reversed(admissible_order(q)):
        out = simple_reflection(q, v, out)
    return out


def coxeter_order(q: QuiverSpec) -> int:
    """Order of the Coxeter transformation on the root lattice."""
    basis = [unit(q.n, v) for v in q.vertices]
    cur = list(basis)
    k = 0
    while True:
        cur = [coxeter_transform(q, x) for x in cur]
        k += 1
        if cur == basis:
            return k


def branch_vertex(t: DynkinType) -> int | None:
    if t.family == "A" or (t.family == "D" and t.rank == 3):
        return None
    return 3 if t.family == "D" else 4


def leaves(q: QuiverSpec) -> list[int]:
    return [v for v in q.vertices if len(q.neighbors(v)) == 1]


def arm_distance(q: QuiverSpec, a: int) -> int | None:
    """Number of vertices on the path from leaf ``a`` to the branch vertex, both included.

    Returns None for non-leaves.
    """
    b = branch_vertex(q.dynkin)
    if b is None:
        raise DynkinError(f"{q.dynkin} has no branch vertex")
    if a not in q.vertices:
        raise DynkinError(f"no vertex {a}")
    if len(q.neighbors(a)) != 1:
        return None
    prev, cur, count = None, a, 1
    while cur != b:
        nxt = [w for w in q.neighbors(cur) if w != prev]
        prev, cur = cur, nxt[0]
        count += 1
    return count


def interior_vertices(q: QuiverSpec) -> list[int]:
    return [v for v in q.vertices if len(q.neighbors(v)) > 1]


def symmetrized_matrix(q: QuiverSpec) -> list[list[int]]:
    e = euler_matrix(q)
    n = q.n
    return [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]


def adjacency_matrix(q: QuiverSpec) -> list[list[int]]:
    n = q.n
    m = [[0] * n for _ in range(n)]
    for a, b in q.edges:
        m[a - 1][b - 1] = m[b - 1][a - 1] = 1
    return m


def sink_sequence_to(src: QuiverSpec, dst: QuiverSpec) -> list[int]:
    """Sink reflections turning ``src``'s orientation into ``dst``'s.

    Found by breadth-first search over orientations (at most ``2^(n-1)``).
    """
    if src.dynkin != dst.dynkin:
        raise DynkinError("different Dynkin types")
    start, goal = src.arrows, dst.arrows
    if start == goal:
        return []
    prev = {start: None}
    queue = [src]
    while queue:
        nxt = []
        for q in queue:
            for v in q.vertices:
                if q.is_sink(v):
                    r = q.reflect(v)
                    if r.arrows not in prev:
                        prev[r.arrows] = (q.arrows, v)
                        if r.arrows == goal:
                            seq = []
                            key = goal
                            while prev[key] is not None:
                                key, w = prev[key]
                                seq.append(w)
                            return seq[::-1]
                        nxt.append(r)
        queue = nxt
    raise DynkinError("orientation not reachable by sink reflections")
