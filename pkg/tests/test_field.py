from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weakmult.field import QQ, Field, FieldMismatch, FieldSpecError, Fp, is_prime, scalar_arith

PRIMES = [3, 5, 7, 11, 101]

rationals = st.fractions(max_denominator=10**6).map(Fraction)


@st.composite
def fp_triples(draw):
    p = draw(st.sampled_from(PRIMES))
    ints = st.integers(-10**6, 10**6)
    return Fp(draw(ints), p), Fp(draw(ints), p), Fp(draw(ints), p)


def test_add_fractions():
    assert scalar_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_inverse_mod_5():
    assert scalar_arith("inv", Fp(3, 5)) == Fp(2, 5)
    assert Fp(3, 5).inverse().value == 2


def test_scalar_arith_ops():
    x, y = Fp(4, 7), Fp(3, 7)
    assert scalar_arith("sub", x, y) == Fp(1, 7)
    assert scalar_arith("mul", x, y) == Fp(5, 7)
    assert scalar_arith("div", x, y) * y == x
    assert scalar_arith("neg", x) == Fp(3, 7)
    with pytest.raises(ValueError):
        scalar_arith("pow", x, y)


@given(st.lists(rationals, min_size=3, max_size=3))
def test_rational_axioms(xs):
    a, b, c = xs
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert scalar_arith("mul", a, scalar_arith("inv", a)) == 1
        assert scalar_arith("inv", scalar_arith("inv", a)) == a


@given(fp_triples())
def test_prime_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Fp(0, a.p)
    if a:
        assert a * a.inverse() == Fp(1, a.p)
        assert a.inverse().inverse() == a


@given(st.integers(-10**9, 10**9), st.sampled_from(PRIMES))
def test_fp_canonical(v, p):
    x = Fp(v, p)
    assert 0 <= x.value < p
    assert (x == Fp(v + p, p)) and str(x) == str(Fp(v + 7 * p, p))


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_rational_canonical(num, den):
    x = QQ(Fraction(num, den))
    assert x.denominator > 0
    assert x == Fraction(num * 3, den * 3)
    assert str(x) == str(Fraction(-num, -den))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith("inv", Fp(0, 5))
    with pytest.raises(ZeroDivisionError):
        scalar_arith("div", Fraction(1), Fraction(0))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Fp(1, 5) + Fp(1, 7)
    with pytest.raises(FieldMismatch):
        Fp(1, 5) * Fraction(1, 2)
    with pytest.raises(FieldMismatch):
        scalar_arith("add", Fraction(1), Fp(1, 5))
    assert Fp(1, 5) != Fp(1, 7)


def test_field_construction():
    assert is_prime(7) and not is_prime(9) and not is_prime(1)
    with pytest.raises(FieldSpecError):
        Field.prime(9)
    with pytest.raises(FieldSpecError):
        Field.prime(2)
    assert Field.prime(2, allow_char_2=True).characteristic == 2
    assert Field.parse("rational") == QQ
    assert Field.parse("fp:5") == Field.prime(5)
    with pytest.raises(FieldSpecError):
        Field.parse("real")
    assert str(Field.prime(11)) == "fp:11" and str(QQ) == "rational"


def test_coercion_and_parsing():
    F5 = Field.prime(5)
    assert F5(Fraction(1, 2)) == Fp(3, 5)
    assert F5.parse_scalar("4 mod 5") == Fp(4, 5)
    assert F5.parse_scalar("3/2") == Fp(4, 5)
    assert QQ.parse_scalar("-3/6") == Fraction(-1, 2)
    with pytest.raises((TypeError, ValueError)):
        QQ(0.5)
    assert [x.value for x in F5.elements()] == [0, 1, 2, 3, 4]
    assert F5.format(F5(7)) == "2 mod 5"
