"""Truncated power series in ``T`` with motivic-class coefficients."""
from __future__ import annotations

from typing import Iterable, List, Sequence

from .arith import MotivicClass, ONE, ONE_POLY, ZERO, ZERO_POLY, as_class

__all__ = [
    "TruncatedSeries",
    "s_add",
    "s_mul",
    "s_invert",
    "s_substitute",
    "s_coeff",
    "geometric",
]


class TruncatedSeries:
    """``c_0 + c_1 T + ... + c_N T^N + O(T^{N+1})``.

    The order ``N`` travels with the value.  Binary operations between
    series of different orders silently truncate to the smaller one.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [as_class(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            coeffs = coeffs[: order + 1] + [ZERO] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a series needs at least a constant term")
        self.coefficients: tuple = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([ONE], order)

    @classmethod
    def parse(cls, text: str, order: int | None = None) -> "TruncatedSeries":
        from .parsing import parse_series

        return parse_series(text, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, k: int) -> MotivicClass:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient T^{k} is beyond order {self.order}")
        return self.coefficients[k]

    __getitem__ = coeff

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.coefficients[: order + 1])

    # -- ring structure --------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        try:
            return TruncatedSeries([as_class(other)], self.order)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coefficients[k] + other.coefficients[k] for k in range(n + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        if all(c.denominator == ONE_POLY for c in a[: n + 1]) and all(
            c.denominator == ONE_POLY for c in b[: n + 1]
        ):
            return _mul_polynomial(a, b, n)
        a_nz = [i for i in range(n + 1) if not a[i].is_zero()]
        b_nz = [j for j in range(n + 1) if not b[j].is_zero()]
        out: List[MotivicClass] = [ZERO] * (n + 1)
        for i in a_nz:
            for j in b_nz:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the order; needs a nonzero constant term."""
        c0 = self.coefficients[0]
        if c0.is_zero():
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        a = self.coefficients
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if not a[j].is_zero():
                    acc = acc + a[j] * out[k - j]
            out.append(-acc * inv0)
        return TruncatedSeries(out)

    def substitute(self, c, ell: int = 1) -> "TruncatedSeries":
        """Substitute ``T -> c * T^ell``, keeping the original order."""
        if not isinstance(ell, int) or ell < 1:
            raise ValueError("substitution exponent must be a positive integer")
        c = as_class(c)
        out = [ZERO] * (self.order + 1)
        power = ONE
        for k in range(self.order // ell + 1):
            out[k * ell] = self.coefficients[k] * power
            power = power * c
        return TruncatedSeries(out)

    # -- comparison / display --------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        from .parsing import format_series

        return format_series(self)

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r})"


def _mul_polynomial(a, b, n) -> "TruncatedSeries":
    pa = [c.numerator for c in a[: n + 1]]
    pb = [c.numerator for c in b[: n + 1]]
    b_nz = [j for j in range(n + 1) if pb[j]]
    out = [ZERO_POLY] * (n + 1)
    for i in range(n + 1):
        if not pa[i]:
            continue
        for j in b_nz:
            if i + j > n:
                break
            out[i + j] = out[i + j] + pa[i] * pb[j]
    series = TruncatedSeries.__new__(TruncatedSeries)
    series.coefficients = tuple(MotivicClass._raw(p, ONE_POLY) for p in out)
    return series


def s_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def s_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def s_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def s_substitute(a: TruncatedSeries, c, ell: int = 1) -> TruncatedSeries:
    return a.substitute(c, ell)


def s_coeff(a: TruncatedSeries, k: int) -> MotivicClass:
    return a.coeff(k)


def geometric(order: int, ratio=1) -> TruncatedSeries:
    """``1 + r T + r^2 T^2 + ...`` up to ``order``."""
    r = as_class(ratio)
    out = [ONE]
    for _ in range(order):
        out.append(out[-1] * r)
    return TruncatedSeries(out)
