import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from motivic.arith import L, ONE, as_class
from motivic.parsing import parse_class
from motivic.varieties import (
    Partition,
    StrataSignature,
    affine_class,
    cell_min_level,
    count_at_most_parts,
    count_parts_at_most,
    gaussian_binomial,
    grassmannian_class,
    match_strata,
    partitions,
    partitions_in_box,
    projective_class,
    schubert_count,
    signature_to_partition,
    strata_signatures,
    stratum_min_level,
)

GR24 = parse_class("1 + L + 2*L^2 + L^3 + L^4")


def brute_partitions(n):
    """All partitions of n from compositions, deduplicated."""
    out = set()
    for cuts in itertools.product([0, 1], repeat=max(n - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        if n:
            parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def count_subspaces(m, n, p):
    """m-dimensional subspaces of F_p^n, by row-reducing every spanning tuple."""
    vectors = list(itertools.product(range(p), repeat=n))
    seen = set()
    for rows in itertools.combinations(vectors, m):
        span = set()
        for coeffs in itertools.product(range(p), repeat=m):
            span.add(tuple(sum(c * r[k] for c, r in zip(coeffs, rows)) % p for k in range(n)))
        if len(span) == p ** m:
            seen.add(frozenset(span))
    return len(seen)


def test_standard_classes():
    assert affine_class(3) == L ** 3
    assert projective_class(0) == ONE
    assert projective_class(2) == 1 + L + L ** 2
    with pytest.raises(ValueError):
        affine_class(-1)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1) == 1 + L
    assert gaussian_binomial(4, 2) == GR24
    assert gaussian_binomial(7, 0) == ONE
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3)


def test_grassmannian_examples():
    assert grassmannian_class(1, 3) == projective_class(2)
    assert grassmannian_class(2, 4) == GR24
    assert grassmannian_class(3, 3) == ONE
    assert len(list(partitions_in_box(2, 2))) == 6


@pytest.mark.parametrize("m, n, p", [(1, 3, 2), (2, 4, 2), (2, 3, 3), (1, 4, 3), (3, 4, 2)])
def test_grassmannian_point_counts_by_enumeration(m, n, p):
    assert grassmannian_class(m, n).evaluate(p) == count_subspaces(m, n, p)
    assert gaussian_binomial(n, m).evaluate(p) == count_subspaces(m, n, p)


@given(st.integers(0, 10), st.integers(0, 10))
def test_grassmannian_two_ways(m, k):
    n = m + k
    g = grassmannian_class(m, n)
    assert g == gaussian_binomial(n, m)
    assert g == grassmannian_class(k, n)
    assert g.evaluate(1) == comb(n, m)


@pytest.mark.parametrize("n", range(0, 13))
def test_partitions_against_brute_force(n):
    got = [p.parts for p in partitions(n)]
    assert set(got) == brute_partitions(n)
    assert got == sorted(got, reverse=True)
    assert len(got) == len(set(got))


def test_partition_counts_examples():
    assert all(count_parts_at_most(1, n) == 1 for n in range(10))
    assert count_parts_at_most(2, 4) == 3
    assert count_at_most_parts(2, 4) == 3
    assert count_parts_at_most(5, 5) == 7
    assert schubert_count(8, 40) == sum(1 for _ in partitions(40, max_part=8))


@given(st.integers(1, 8), st.integers(0, 25))
def test_conjugation_equates_counts(m, n):
    by_size = {p for p in partitions(n, max_part=m)}
    by_len = {p for p in partitions(n, max_len=m)}
    assert {p.conjugate() for p in by_size} == by_len
    assert count_parts_at_most(m, n) == len(by_size) == count_at_most_parts(m, n) == len(by_len)


def test_partition_validation_and_conjugate():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition(()).conjugate() == Partition(())
    assert str(Partition((2, 1))) == "(2,1)"


def test_strata_examples():
    assert set(strata_signatures(2, 2)) == {StrataSignature((0, 1)), StrataSignature((2,))}
    assert strata_signatures(1, 3) == [StrataSignature((0, 0, 1))]
    assert [s.multiplicities for s in strata_signatures(4, 0)] == [()]
    assert StrataSignature((1, 0, 0)).multiplicities == (1,)
    assert str(StrataSignature((0, 1))) == "[0,1]"


def test_match_examples():
    assert set(match_strata(2, 2)) == {
        (StrataSignature((0, 1)), Partition((2,))),
        (StrataSignature((2,)), Partition((1, 1))),
    }
    assert {lam for _, lam in match_strata(3, 3)} == {Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))}
    assert match_strata(5, 0) == [(StrataSignature(()), Partition(()))]


def test_levels():
    assert stratum_min_level(StrataSignature((0, 1))) == 2
    assert cell_min_level(Partition((2,)), 2) == 4
    assert stratum_min_level(StrataSignature(())) == 0
    with pytest.raises(ValueError):
        cell_min_level(Partition((1, 1, 1)), 2)


@given(st.integers(1, 6), st.integers(0, 18))
def test_match_is_dimension_preserving_bijection(m, n):
    pairs = match_strata(m, n)
    cells = set(partitions(n, max_len=m))
    assert {lam for _, lam in pairs} == cells
    assert len(pairs) == len(cells)
    for sig, lam in pairs:
        assert sig.dimension == lam.weight == n
        assert sig.size == len(lam) <= m
        assert cell_min_level(lam, m) == m + stratum_min_level(sig)
        assert signature_to_partition(sig) == lam


def test_enumeration_order_is_fixed():
    first = [str(s) for s in strata_signatures(3, 4)]
    assert first == [str(s) for s in strata_signatures(3, 4)]
    assert first == sorted(first, key=lambda t: [int(x) for x in t[1:-1].split(",")], reverse=True)
