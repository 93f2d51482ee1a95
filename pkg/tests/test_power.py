import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from motivic.arith import L, ONE, MotivicPolynomial, as_class
from motivic.oracle import brute_force_cycles
from motivic.power import (
    ExponentVector,
    PartitionVector,
    UnsupportedExponentError,
    binomial_series_coefficient,
    enumerate_partition_vectors,
    euler_factorize,
    expand_factor,
    power,
    power_finite,
)
from motivic.series import TruncatedSeries, geometric
from motivic.suites import check_properties
from motivic.zeta import VerificationReport
from strategies import exponents, unit_series


def S(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


def binomial_product(i, b: MotivicPolynomial, order):
    """(1 - T^i)^(-b) as prod_k (1 - L^k T^i)^(-n_k), each by the binomial series."""
    out = TruncatedSeries.one(order)
    for k, n in b.items():
        coeffs = [0] * (order + 1)
        for j in range(order // i + 1):
            coeffs[i * j] = binomial_series_coefficient(n, j) * L ** (k * j)
        out = out * TruncatedSeries(coeffs)
    return out


# -- euler_factorize ----------------------------------------------------------

def test_factorize_examples():
    assert euler_factorize(geometric(6)).exponents == (ONE,) + (as_class(0),) * 5
    v = euler_factorize(S(1, 1, order=6))
    assert v[1] == 1 and v[2] == -1 and all(v[i] == 0 for i in range(3, 7))
    z = geometric(6) * geometric(6, L)
    v = euler_factorize(z)
    assert v[1] == 1 + L and all(v[i] == 0 for i in range(2, 7))


def test_factorize_needs_unit_constant():
    with pytest.raises(ValueError):
        euler_factorize(S(2, 1))
    with pytest.raises(IndexError):
        euler_factorize(S(1, 1))[2]


@given(unit_series())
def test_factorize_round_trip(a):
    assert euler_factorize(a).expand() == a


# -- expand_factor -------------------------------------------------------------

def test_expand_factor_examples():
    assert expand_factor(1, L, 5) == geometric(5, L)
    assert expand_factor(1, 1, 5) == geometric(5)
    assert expand_factor(2, -L, 6) == S(1, 0, -L, order=6)
    with pytest.raises(UnsupportedExponentError):
        expand_factor(1, ONE / (L - 1), 3)


@settings(max_examples=60)
@given(exponents(), st.integers(1, 3), st.integers(0, 9))
def test_expand_factor_matches_binomial_products(b, i, order):
    assert expand_factor(i, b, order) == binomial_product(i, b.numerator, order)


def test_binomial_series_coefficient():
    assert [binomial_series_coefficient(2, j) for j in range(4)] == [1, 2, 3, 4]
    assert [binomial_series_coefficient(-3, j) for j in range(5)] == [1, -3, 3, -1, 0]
    assert binomial_series_coefficient(0, 0) == 1


# -- power ----------------------------------------------------------------------

def test_power_examples():
    assert power(S(1, 1, order=4), 2) == S(1, 2, 1, order=4)
    assert power(geometric(5), L) == geometric(5, L)
    p = power(S(1, 1, order=4), L)
    assert p == S(1, L, L ** 2 - L, L ** 3 - L ** 2, L ** 4 - L ** 3)


def test_power_of_one_plus_t_counts_frobenius_stable_subsets():
    # coefficient of T^k at L = q: squarefree monic degree-k polynomials over F_q
    p = power(S(1, 1, order=3), L)
    for q in (2, 3):
        for k in (2, 3):
            assert p.coeff(k).evaluate(q) == q ** k - q ** (k - 1)


def test_unsupported_exponent_names_factor():
    with pytest.raises(UnsupportedExponentError, match=r"\(1 - T\^1\)"):
        power(S(1, 1), ONE / (L - 1))
    with pytest.raises(UnsupportedExponentError):
        power(TruncatedSeries.one(3), ONE / (L - 1))


def test_fractional_euler_exponents_are_unsupported():
    a = S(1, ONE / (L - 1), order=2)
    with pytest.raises(UnsupportedExponentError):
        euler_factorize(a)
    with pytest.raises(UnsupportedExponentError):
        power(a, L - 1)


def test_exponent_vector_helpers():
    v = ExponentVector((L, ONE))
    assert v.order == 2
    assert v.scaled(L)[1] == L ** 2
    assert v.expand() == geometric(2, L) * S(1, 0, 1)


@settings(max_examples=40, deadline=None)
@given(unit_series(max_order=5), unit_series(max_order=5), exponents(), exponents(), st.integers(1, 3))
def test_power_structure_axioms(a, b, m, n, ell):
    report = VerificationReport("properties")
    check_properties(report, a, b, m, n, ell)
    assert report.passed, report.failures[:3]


@given(unit_series(), st.integers(-3, 4))
def test_integer_exponents_agree_with_repeated_product(a, k):
    assert power(a, k) == a ** k


# -- partition vectors and power_finite ---------------------------------------------

def brute_partition_vectors(k, r, max_size):
    out = []
    for ks in itertools.product(range(k + 1), repeat=r):
        if sum((i + 1) * x for i, x in enumerate(ks)) == k and (max_size is None or sum(ks) <= max_size):
            out.append(tuple(ks))
    return sorted(out, reverse=True)


def test_partition_vector_examples():
    assert {str(v) for v in enumerate_partition_vectors(2)} == {"{k1=2}", "{k2=1}"}
    assert {str(v) for v in enumerate_partition_vectors(4, max_size=2)} == {
        "{k4=1}",
        "{k1=1,k3=1}",
        "{k2=2}",
    }
    (empty,) = enumerate_partition_vectors(0)
    assert empty.weight == 0 and empty.size == 0


@pytest.mark.parametrize("k", range(0, 7))
@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("max_size", [None, 1, 2, 4])
def test_partition_vectors_against_brute_force(k, r, max_size):
    got = [v.multiplicities + (0,) * (r - len(v.multiplicities)) for v in enumerate_partition_vectors(k, r, max_size)]
    assert got == brute_partition_vectors(k, r, max_size)


def test_power_finite_examples():
    a = 5
    assert power_finite([a], 2, 4) == S(1, 2 * a, a * a, order=4)
    a1, a2 = 2, -3
    assert power_finite([a1, a2], 3, 4).coeff(2) == 3 * a1 * a1 + 3 * a2
    assert power_finite([1, 2, 3], 0, 5) == TruncatedSeries.one(5)


def test_power_finite_matches_power_on_seeded_draws():
    rng = random.Random(7)
    for _ in range(30):
        coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
        for m in range(5):
            assert power_finite(coeffs, m, 6) == power(TruncatedSeries([1] + coeffs, 6), m)


def test_power_finite_brute_force_on_a_point_set():
    # (1 + T)^{m} for the finite set of m points: subsets counted by size
    for m in range(6):
        assert [int(c.evaluate(0)) for c in power_finite([1], m, 6).coefficients] == [
            sum(1 for s in itertools.combinations(range(m), k)) for k in range(7)
        ]


def test_kapranov_of_point_set_matches_brute_force_cycles():
    # (1 - T)^{-[P^1]} at L=2, coefficient 2, equals stable pairs on P^1(F_2bar)
    z = power(geometric(3), 1 + L)
    assert z.coeff(2).evaluate(2) == brute_force_cycles("P^1", 2, 2)
