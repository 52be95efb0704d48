from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gwablocks import linalg as la

F5 = la.PrimeField(5)

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=max_rows))


@given(matrices())
def test_rank_matches_sympy(m):
    assert la.rank(m) == sympy.Matrix(m).rank()


@given(matrices(), st.sampled_from([la.QQ, F5, la.PrimeField(2)]))
def test_rank_nullity(m, field):
    cols = len(m[0])
    ns = la.nullspace(m, cols, field)
    assert la.rank(m, field) + len(ns) == cols
    mf = [[field(x) for x in row] for row in m]
    for v in ns:
        assert all(x == 0 for x in la.matvec(mf, v, field))


@given(matrices(), st.sampled_from([la.QQ, F5]))
def test_rref_is_reduced(m, field):
    red, piv = la.rref(m, field)
    for i, (row, p) in enumerate(zip(red, piv)):
        assert row[p] == 1
        assert all(red[j][p] == 0 for j in range(len(red)) if j != i)
        assert all(x == 0 for x in row[:p])
    assert piv == sorted(piv)


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_consistent(m, x):
    cols = len(m[0])
    x = [Fraction(v) for v in x[:cols]]
    b = la.matvec([[Fraction(v) for v in row] for row in m], x)
    sol = la.solve(m, b, cols)
    assert sol is not None
    assert la.matvec([[Fraction(v) for v in row] for row in m], sol) == b


@settings(max_examples=60)
@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(small, min_size=4, max_size=4), max_size=3))
def test_intersection_dimension(a, b):
    dim = 4
    inter = la.intersect(a, b, dim)
    total = la.rank(a + b) if a + b else 0
    ra = la.rank(a) if a else 0
    rb = la.rank(b) if b else 0
    assert len(inter) == ra + rb - total
    ra_red, ra_piv = la.rref(a) if a else ([], [])
    for v in inter:
        assert la.in_span(v, ra_red, ra_piv)


def test_prime_field_arithmetic():
    assert F5(Fraction(1, 2)) == 3
    assert F5.inv(2) == 3
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(ValueError):
        la.PrimeField(4)


def test_field_names():
    assert la.field_from_name("Q") is la.QQ
    assert la.field_from_name("f3") == la.PrimeField(3)
    with pytest.raises(ValueError):
        la.field_from_name("R")


def test_matmul_empty_inner():
    assert la.matmul([[], []], [], ncols=3) == [[0, 0, 0], [0, 0, 0]]
    with pytest.raises(ValueError):
        la.matmul([[]], [])
