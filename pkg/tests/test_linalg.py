from fractions import Fraction

from hypothesis import given, settings, strategies as st

from weakmult.field import QQ, Field
from weakmult.linalg import (Matrix, Subspace, extend_to_complement, in_span, intersection,
                             is_direct_complement, nullspace, rank, rref)

F7 = Field.prime(7)


def M(rows, field=QQ):
    return Matrix(rows, field)


def test_rref_identity():
    I = Matrix.identity(3, QQ)
    assert rref(I) == (I, (0, 1, 2), 3)


def test_rref_zero():
    Z = Matrix.zeros(2, 2, QQ)
    assert rref(Z) == (Z, (), 0)


def test_rref_dependent_rows():
    red, piv, rk = rref(M([[2, 4], [1, 2]]))
    assert red == M([[1, 2], [0, 0]]) and piv == (0,) and rk == 1


def test_nullspace_examples():
    assert nullspace(Matrix.identity(4, QQ)).dim == 0
    assert nullspace(Matrix.zeros(2, 3, QQ)) == Subspace.full(3, QQ)
    ns = nullspace(M([[1, 1]]))
    assert ns.dim == 1 and ns.vectors() == [(1, -1)]


def test_in_span_examples():
    s = Subspace([[1, 0]], 2, QQ)
    assert in_span(s, (3, 0)) == (3,)
    assert in_span(s, (0, 1)) is None
    full = Subspace.full(3, QQ)
    assert in_span(full, (Fraction(1, 2), 5, -1)) == (Fraction(1, 2), 5, -1)


def test_complement_examples():
    s = Subspace([[1, 0, 1]], 3, QQ)
    c = extend_to_complement(s)
    assert c == Subspace([[1, 0, 0], [0, 1, 0]], 3, QQ)
    assert rank(Matrix(s.vectors() + c.vectors(), QQ)) == 3
    assert is_direct_complement(s, c)
    assert extend_to_complement(Subspace.zero(3, QQ)) == Subspace.full(3, QQ)
    assert extend_to_complement(Subspace.full(3, QQ)).dim == 0


def test_subspace_operations():
    a = Subspace([[1, 0, 0], [0, 1, 0]], 3, QQ)
    b = Subspace([[0, 1, 0], [0, 0, 1]], 3, QQ)
    assert intersection(a, b) == Subspace([[0, 1, 0]], 3, QQ)
    assert (a + b).dim == 3
    assert (a & b) <= a
    assert a.orthogonal() == Subspace([[0, 0, 1]], 3, QQ)


def test_canonical_equality():
    a = Subspace([[1, 2, 3], [2, 4, 7]], 3, QQ)
    b = Subspace([[0, 0, 5], [3, 6, 0]], 3, QQ)
    assert a == b and a.basis == b.basis


def test_flatten_is_column_major():
    T = M([[1, 2], [3, 4]])
    assert T.flatten_columns() == (1, 3, 2, 4)
    assert Matrix.unflatten_columns(T.flatten_columns(), 2, QQ) == T


def matrices(field):
    ints = st.integers(-3, 3)
    return st.integers(1, 4).flatmap(
        lambda r: st.integers(1, 5).flatmap(
            lambda c: st.lists(st.lists(ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: Matrix(rows, field))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([QQ, F7]).flatmap(matrices))
def test_rref_and_nullspace_properties(m):
    red, piv, rk = rref(m)
    assert rref(red)[0] == red
    assert rk == len(piv) == rank(m)
    ns = nullspace(m)
    assert rk + ns.dim == m.ncols
    for v in ns:
        assert all(x == 0 for x in m.apply(v))
    c = extend_to_complement(ns)
    stacked = ns.vectors() + c.vectors()
    assert len(stacked) == 0 or rank(Matrix(stacked, m.field, m.ncols)) == m.ncols


@settings(max_examples=40, deadline=None)
@given(matrices(QQ), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_in_span_coordinates(m, coeffs):
    s = Subspace(m.rows, m.ncols, QQ)
    v = [0] * m.ncols
    for c, b in zip(coeffs, s.vectors()):
        v = [x + c * y for x, y in zip(v, b)]
    coords = in_span(s, v)
    assert coords is not None
    recon = [sum((c * b[i] for c, b in zip(coords, s.vectors())), Fraction(0)) for i in range(m.ncols)]
    assert recon == [Fraction(x) for x in v]
