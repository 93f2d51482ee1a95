"""The power structure ``(A(T))^M`` over classes that are Laurent polynomials in L.

Every series with constant term 1 factors uniquely as
``prod_i (1 - T^i)^(-b_i)``.  Exponentiation multiplies each ``b_i`` by
``M`` and expands again, using the rule ``(1 - T^i)^(-L^k) = (1 - L^k T^i)^(-1)``
extended multiplicatively to integer combinations of powers of ``L``.

For an exponent that is a finite set of ``m`` points, :func:`power_finite`
sums over configurations of distinct coloured points directly, with the
quotient by the colour-permuting groups reduced to a multinomial count.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Sequence, Tuple

from .arith import MotivicClass, ONE, ONE_POLY, ZERO, ZERO_POLY, MotivicPolynomial, as_class
from .series import TruncatedSeries

__all__ = [
    "UnsupportedExponentError",
    "ExponentVector",
    "PartitionVector",
    "euler_factorize",
    "expand_factor",
    "power",
    "power_finite",
    "enumerate_partition_vectors",
    "binomial_series_coefficient",
    "adams",
]


class UnsupportedExponentError(ValueError):
    """The exponent is not a Laurent polynomial in L with integer coefficients."""


def binomial_series_coefficient(n: int, j: int) -> int:
    """Coefficient of ``x^j`` in ``(1 - x)^(-n)`` for any integer ``n``.

    >>> [binomial_series_coefficient(-2, j) for j in range(4)]
    [1, -2, 1, 0]
    """
    num = 1
    for t in range(j):
        num *= n + t
    return num // factorial(j)


def _integer_laurent(b: MotivicClass, what: str) -> MotivicPolynomial:
    if not b.is_polynomial():
        raise UnsupportedExponentError(
            f"{what} = {b} is not a Laurent polynomial in L with integer coefficients"
        )
    return b.numerator


def adams(b: MotivicPolynomial, d: int) -> MotivicPolynomial:
    """``b(L^d)``: on ``sum n_k L^k`` this is ``sum n_k L^{dk}``."""
    return MotivicPolynomial._raw({e * d: c for e, c in b._terms.items()})


def expand_factor(i: int, b, order: int) -> TruncatedSeries:
    """``(1 - T^i)^(-b)`` truncated at ``order``.

    For ``b = sum n_k L^k`` this is ``prod_k (1 - L^k T^i)^(-n_k)``.  Its
    logarithm is ``sum_d b(L^d) x^d / d`` with ``x = T^i``, so the
    coefficients follow ``j f_j = sum_{d=1..j} b(L^d) f_{j-d}``.

    >>> print(expand_factor(2, -MotivicClass(MotivicPolynomial({1: 1})), 4))
    1 - L*T^2 + O(T^5)
    """
    if i < 1:
        raise ValueError("factor index must be positive")
    b = as_class(b)
    poly = _integer_laurent(b, f"exponent of (1 - T^{i})")
    top = order // i
    psi = [None] + [adams(poly, d) for d in range(1, top + 1)]
    f = [ONE_POLY]
    for j in range(1, top + 1):
        acc = ZERO_POLY
        for d in range(1, j + 1):
            acc = acc + psi[d] * f[j - d]
        f.append(acc.exact_div_int(j))
    coeffs = [ZERO] * (order + 1)
    for j, fj in enumerate(f):
        coeffs[i * j] = MotivicClass._raw(fj, ONE_POLY)
    return TruncatedSeries(coeffs)


@dataclass(frozen=True)
class ExponentVector:
    """Exponents ``b_1..b_N`` of ``prod_i (1 - T^i)^(-b_i)`` truncated at ``N``."""

    exponents: Tuple[MotivicClass, ...]

    @property
    def order(self) -> int:
        return len(self.exponents)

    def __getitem__(self, i: int) -> MotivicClass:
        """1-based access: ``vec[i]`` is ``b_i``."""
        if not 1 <= i <= self.order:
            raise IndexError(i)
        return self.exponents[i - 1]

    def scaled(self, m) -> "ExponentVector":
        m = as_class(m)
        return ExponentVector(tuple(b * m for b in self.exponents))

    def expand(self, order: Optional[int] = None) -> TruncatedSeries:
        n = self.order if order is None else order
        result = TruncatedSeries.one(n)
        for i, b in enumerate(self.exponents[:n], start=1):
            if not b.is_zero():
                result = result * expand_factor(i, b, n)
        return result


def euler_factorize(a: TruncatedSeries) -> ExponentVector:
    """Canonical exponents with ``prod (1 - T^i)^(-b_i) = A(T)`` mod ``T^(N+1)``.

    >>> from .series import TruncatedSeries
    >>> euler_factorize(TruncatedSeries([1, 1], 3)).exponents
    (MotivicClass('1'), MotivicClass('-1'), MotivicClass('0'))
    """
    if a.coefficients[0] != ONE:
        raise ValueError("euler_factorize needs constant term 1")
    n = a.order
    rest = a
    out: List[MotivicClass] = []
    for i in range(1, n + 1):
        b = rest.coefficients[i]
        out.append(b)
        if not b.is_zero():
            rest = rest * expand_factor(i, -b, n)
    return ExponentVector(tuple(out))


def power(a: TruncatedSeries, m) -> TruncatedSeries:
    """``(A(T))^M`` through the canonical factorisation of ``A``."""
    m = as_class(m)
    vec = euler_factorize(a)
    n = a.order
    result = TruncatedSeries.one(n)
    for i, b in enumerate(vec.exponents, start=1):
        if b.is_zero():
            continue
        e = b * m
        if not e.is_polynomial():
            raise UnsupportedExponentError(
                f"exponent b_{i}*M = ({b})*({m}) = {e} of the factor (1 - T^{i}) "
                "is not a Laurent polynomial in L with integer coefficients"
            )
        result = result * expand_factor(i, e, n)
    if not m.is_polynomial():
        # only reachable when A = 1, where every b_i vanishes
        raise UnsupportedExponentError(f"exponent M = {m} is not a Laurent polynomial in L")
    return result


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicities ``k_1..k_r``: ``k_i`` points carry colour ``i``."""

    multiplicities: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(i * k for i, k in enumerate(self.multiplicities, start=1))

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    def __str__(self):
        inner = ",".join(f"k{i}={k}" for i, k in enumerate(self.multiplicities, start=1) if k)
        return "{" + inner + "}"


def enumerate_partition_vectors(
    k: int, r: Optional[int] = None, max_size: Optional[int] = None
) -> List[PartitionVector]:
    """All ``(k_1..k_r)`` with ``sum i*k_i = k`` and ``sum k_i <= max_size``.

    Ordered lexicographically decreasing in ``(k_1, k_2, ...)``.

    >>> [v.multiplicities for v in enumerate_partition_vectors(2)]
    [(2, 0), (0, 1)]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = k if r is None else r
    cap = k if max_size is None else max_size
    out: List[PartitionVector] = []
    cur = [0] * r

    def rec(i: int, remaining: int, room: int):
        if remaining == 0:
            out.append(PartitionVector(tuple(cur)))
            return
        if remaining > room * r:
            return
        # next colour with a nonzero count; smaller colours first keeps the order
        for j in range(i, min(r, remaining) + 1):
            for c in range(min(remaining // j, room), 0, -1):
                cur[j - 1] = c
                rec(j + 1, remaining - j * c, room - c)
            cur[j - 1] = 0

    rec(1, k, cap)
    return out


def power_finite(a: Sequence[int], m: int, order: int) -> TruncatedSeries:
    """``(1 + a_1 T + ... + a_r T^r)^M`` for ``M`` a set of ``m`` points.

    Each term of the configuration-space sum is a free quotient of a finite
    set, so its class is the orbit count
    ``m! / ((m - sum k_i)! prod k_i!) * prod a_i^k_i``.

    >>> print(power_finite([2], 2, 3))
    1 + 4*T + 4*T^2 + O(T^4)
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    a = [int(x) for x in a]
    r = len(a)
    coeffs = [1]
    for k in range(1, order + 1):
        total = 0
        for vec in enumerate_partition_vectors(k, r, m):
            count = factorial(m) // factorial(m - vec.size)
            weight = 1
            for ai, ki in zip(a, vec.multiplicities):
                count //= factorial(ki)
                weight *= ai ** ki
            total += count * weight
        coeffs.append(total)
    return TruncatedSeries(coeffs)
