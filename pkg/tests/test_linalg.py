from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from clustertilt import linalg as la


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_small():
    assert la.rank([[1, 2], [2, 4]]) == 1
    assert la.rank([[1, 0], [0, 1]]) == 2
    assert la.rank([[0, 0]]) == 0


def test_nullspace_is_integral_and_canonical():
    basis = la.nullspace([[1, 2, 3]], 3)
    assert basis == la.nullspace([[1, 2, 3]], 3)
    assert len(basis) == 2
    for v in basis:
        assert all(Fraction(x).denominator == 1 for x in v)
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


def test_solve_inconsistent():
    assert la.solve([[1, 1], [1, 1]], [[1], [2]], 2) is None


def test_right_inverse():
    m = [[1, 2, 0], [0, 1, 1]]
    assert la.matmul(m, la.right_inverse(m, 3)) == la.identity(2)


@given(matrices())
def test_rank_plus_nullity(m):
    cols = len(m[0])
    ns = la.nullspace(m, cols)
    assert la.rank(m) + len(ns) == cols
    for v in ns:
        assert all(x == 0 for x in la.matvec(m, v))


@given(matrices(), st.data())
def test_solve_recovers_consistent_rhs(m, data):
    cols = len(m[0])
    x0 = data.draw(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols))
    b = [[v] for v in la.matvec(m, x0)]
    x = la.solve(m, b, cols)
    assert x is not None
    assert la.matmul(m, x) == b


@given(matrices())
def test_rank_transpose(m):
    assert la.rank(m) == la.rank(la.transpose(m))
