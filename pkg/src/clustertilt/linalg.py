"""Exact linear algebra over the rationals.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
Everything here is deterministic: pivots are chosen left to right, top to
bottom, so bases returned by :func:`nullspace` and friends are canonical for
a given input matrix.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence

Matrix = List[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``.  ``cols`` gives the column count when ``b`` has no rows."""
    if not a:
        return []
    if not b:
        ncols = cols if cols is not None else 0
        return [[0] * ncols for _ in a]
    ncols = len(b[0])
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(ncols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v) if x and y) for row in a]


def transpose(m: Matrix, cols: int = 0) -> Matrix:
    if not m:
        return [[] for _ in range(cols)]
    return [list(col) for col in zip(*m)]


def hstack(blocks: Sequence[Matrix], rows: int) -> Matrix:
    out = [[] for _ in range(rows)]
    for b in blocks:
        for i in range(rows):
            out[i].extend(b[i] if b else [])
    return out


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    out: Matrix = []
    for b in blocks:
        out.extend([list(r) for r in b])
    return out


def is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.  Input is not modified."""
    rows = [[Fraction(x) for x in r] for r in m]
    if not rows:
        return [], []
    n = len(rows[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [x - f * y if y else x for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [[_normalize(x) for x in row] for row in rows[:r]], pivots


def rank(m: Matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination on integer rows."""
    if not m or not m[0]:
        return 0
    rows = _integer_rows(m)
    ncols = len(rows[0])
    rk = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rk, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][c]
        prow = rows[rk]
        for i in range(rk + 1, len(rows)):
            ri = rows[i]
            f = ri[c]
            rows[i] = [(p * x - f * y) // prev for x, y in zip(ri, prow)]
        prev = p
        rk += 1
        if rk == len(rows):
            break
    return rk


def _integer_rows(m: Matrix) -> list[list[int]]:
    out = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def primitive(v: Sequence) -> list:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    den = 1
    for x in v:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = den * x.denominator // gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g > 1:
        w = [x // g for x in w]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return w


def nullspace(m: Matrix, ncols: int) -> list[list]:
    """Basis of ``{x : m x = 0}`` as a list of integer vectors (one per free column)."""
    if not m:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(m, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -Fraction(row[free])
        basis.append(primitive(v))
    return basis


def left_nullspace(m: Matrix, nrows: int) -> list[list]:
    """Basis of ``{y : y m = 0}``, i.e. row vectors killing ``m`` from the left."""
    if not m or not m[0]:
        return [[1 if i == j else 0 for i in range(nrows)] for j in range(nrows)]
    return nullspace(transpose(m), nrows)


def column_basis(vectors: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of a maximal independent subfamily, greedy in the given order."""
    chosen: list[int] = []
    red: list[list] = []
    pcols: list[int] = []
    for idx, v in enumerate(vectors):
        w = [Fraction(x) for x in v]
        for row, pc in zip(red, pcols):
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        piv = next((c for c in range(dim) if w[c]), None)
        if piv is None:
            continue
        p = w[piv]
        w = [a / p for a in w]
        for k, row in enumerate(red):
            f = row[piv]
            if f:
                red[k] = [a - f * b for a, b in zip(row, w)]
        red.append(w)
        pcols.append(piv)
        chosen.append(idx)
    return chosen


def solve(a: Matrix, b: Matrix, ncols: int) -> Matrix | None:
    """Some ``x`` with ``a x = b`` (``a`` is r x ncols, ``b`` is r x k), or None."""
    rows = len(a)
    k = len(b[0]) if b else 0
    if rows == 0:
        return [[0] * k for _ in range(ncols)]
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    red, pivots = rref(aug, ncols + k)
    x = [[0] * k for _ in range(ncols)]
    for row, pc in zip(red, pivots):
        if pc >= ncols:
            return None
        for j in range(k):
            x[pc][j] = row[ncols + j]
    return x


def right_inverse(m: Matrix, ncols: int) -> Matrix:
    """``s`` with ``m s = I`` for a full-row-rank ``m``."""
    r = len(m)
    s = solve(m, identity(r), ncols)
    if s is None:
        raise ValueError("matrix does not have full row rank")
    return s


def complement_basis(sub: Sequence[Sequence], dim: int) -> list[list[int]]:
    """Standard unit vectors completing the span of ``sub`` to the whole space."""
    units = [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
    picked = column_basis(list(sub) + units, dim)
    nsub = len(sub)
    return [units[i - nsub] for i in picked if i >= nsub]


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def coordinates(basis: Sequence[Sequence], v: Sequence) -> list | None:
    """Coordinates of ``v`` in the span of ``basis`` (vectors), or None."""
    if not basis:
        return [] if all(not x for x in v) else None
    a = transpose([list(b) for b in basis])
    sol = solve(a, [[x] for x in v], len(basis))
    if sol is None:
        return None
    return [row[0] for row in sol]
