import pytest
from hypothesis import given, strategies as st

from motivic.arith import L, ONE, ZERO
from motivic.series import TruncatedSeries, geometric, s_add, s_coeff, s_invert, s_mul, s_substitute
from strategies import unit_series


def S(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


def test_arithmetic_examples():
    assert s_mul(S(1, 1, order=2), S(1, -1, order=2)) == S(1, 0, -1, order=2)
    assert s_add(S(1, L), S(1, -L)) == S(2, 0)
    a = S(1, L, L ** 2)
    assert s_mul(a, TruncatedSeries.one(2)) == a


def test_mixed_orders_truncate():
    p = S(1, 1, 1, 1) * S(1, 1)
    assert p.order == 1
    assert p == S(1, 2)
    assert (S(1, 1, 1) + S(1, 1)).order == 1


def test_invert_examples():
    assert s_invert(S(1, -1, order=5)) == geometric(5)
    assert s_invert(S(1, -L, order=5)) == geometric(5, L)
    assert s_invert(S(1, 0, L, order=4)) == S(1, 0, -L, 0, L ** 2)
    with pytest.raises(ZeroDivisionError):
        s_invert(S(0, 1))


def test_invert_fraction_constant():
    s = S(L - 1, 1, order=3)
    assert (s * s.invert()) == TruncatedSeries.one(3)


def test_substitute_examples():
    assert s_substitute(S(1, 1, 1), L, 1) == S(1, L, L ** 2)
    assert s_substitute(S(1, 1, order=2), 1, 2) == S(1, 0, 1)
    z_l = geometric(6, L)
    assert s_substitute(z_l, L, 1) == geometric(6, L ** 2)
    with pytest.raises(ValueError):
        s_substitute(S(1, 1), L, 0)


def test_coeff_examples():
    assert s_coeff(S(1, L), 1) == L
    assert s_coeff(S(1, L), 0) == ONE
    assert s_coeff(s_invert(S(1, -L, order=5)), 5) == L ** 5
    with pytest.raises(IndexError):
        s_coeff(S(1, L), 2)


def test_padding_and_truncate():
    s = S(1, L, order=4)
    assert s.coefficients[2:] == (ZERO, ZERO, ZERO)
    assert s.truncate(1) == S(1, L)
    with pytest.raises(ValueError):
        s.truncate(7)


def test_integer_powers():
    assert S(1, 1, order=4) ** 3 == S(1, 3, 3, 1, 0)
    assert S(1, -1, order=4) ** -1 == geometric(4)


@given(unit_series(), unit_series(), unit_series())
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(unit_series())
def test_inverse(a):
    assert a * a.invert() == TruncatedSeries.one(a.order)


@given(unit_series(), unit_series(), st.integers(1, 3))
def test_substitution_is_multiplicative(a, b, ell):
    assert (a * b).substitute(L, ell) == a.substitute(L, ell) * b.substitute(L, ell)
