"""Exact arithmetic for motivic classes.

Classes of cellular varieties are Laurent polynomials in the Lefschetz
class ``L`` with integer coefficients; classifying-stack classes such as
``[BGL(m)]`` need reduced fractions of those.  Everything here is exact:
coefficients are Python ints and specialisations return ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Tuple

__all__ = [
    "MotivicPolynomial",
    "MotivicClass",
    "PoleError",
    "L",
    "ONE",
    "ZERO",
    "as_class",
    "add",
    "mul",
    "div",
    "eval_at",
    "is_effective",
]


class PoleError(ZeroDivisionError):
    """Raised when a class is specialised at a root of its denominator."""


# ---------------------------------------------------------------------------
# dense helpers on ordinary polynomials (ascending coefficient lists)
# ---------------------------------------------------------------------------

def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _divmod_dense(num, den):
    """Long division over the rationals; returns (quotient, remainder)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    _trim(num)
    _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / lead
        quot[shift] = c
        if c:
            for j, d in enumerate(den):
                num[shift + j] -= c * d
    return _trim(quot), _trim(num[: len(den) - 1])


def _primitive(coeffs) -> List[int]:
    """Scale a rational coefficient list to a primitive integer list with positive lead."""
    coeffs = [Fraction(c) for c in coeffs]
    _trim(coeffs)
    if not coeffs:
        return []
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _gcd_dense(a, b) -> List[int]:
    """Primitive gcd over Q[x] with positive leading coefficient."""
    a = _primitive(a)
    b = _primitive(b)
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, _primitive(r)
    return a


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class MotivicPolynomial:
    """Laurent polynomial in ``L`` with integer coefficients.

    Stored sparsely as ``{exponent: coefficient}`` with no zero entries, so
    structural equality is semantic equality.  Instances are immutable.

    >>> p = MotivicPolynomial({2: 1, 1: -1})
    >>> p
    MotivicPolynomial('L^2 - L')
    >>> p * MotivicPolynomial({-1: 1})
    MotivicPolynomial('L - 1')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, clean: Dict[int, int]) -> "MotivicPolynomial":
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "MotivicPolynomial":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "MotivicPolynomial":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def from_dense(cls, coeffs, shift: int = 0) -> "MotivicPolynomial":
        return cls._raw({i + shift: int(c) for i, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        """Lowest exponent present."""
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.degree] if self._terms else 0

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def dense(self) -> List[int]:
        """Ascending coefficients starting at the valuation."""
        if not self._terms:
            return []
        v = self.valuation
        out = [0] * (self.degree - v + 1)
        for e, c in self._terms.items():
            out[e - v] = c
        return out

    def shift(self, k: int) -> "MotivicPolynomial":
        """Multiply by ``L^k``."""
        return MotivicPolynomial._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> "MotivicPolynomial":
        if not c:
            return ZERO_POLY
        return MotivicPolynomial._raw({e: c * v for e, v in self._terms.items()})

    def exact_div_int(self, c: int) -> "MotivicPolynomial":
        out = {}
        for e, v in self._terms.items():
            q, r = divmod(v, c)
            if r:
                raise ValueError(f"{c} does not divide {self}")
            out[e] = q
        return MotivicPolynomial._raw(out)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MotivicPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MotivicPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return MotivicPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    return MotivicPolynomial._raw({e * n: c ** (-n)})
            raise ValueError("negative power of a non-unit polynomial")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: "MotivicPolynomial") -> "MotivicPolynomial":
        """Exact quotient ``self / other`` in Z[L, 1/L]; raises if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO_POLY
        q, r = _divmod_dense(self.dense(), other.dense())
        if r:
            raise ValueError(f"{other} does not divide {self}")
        shift = self.valuation - other.valuation
        if any(Fraction(c).denominator != 1 for c in q):
            raise ValueError(f"{other} does not divide {self} over the integers")
        return MotivicPolynomial.from_dense([int(c) for c in q], shift)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        if x == 0 and self._terms and self.valuation < 0:
            raise PoleError("negative power of L evaluated at 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x ** e
        return total

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            if isinstance(other, MotivicClass):
                return NotImplemented
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"MotivicPolynomial({str(self)!r})"


def _coerce_poly(x):
    if isinstance(x, MotivicPolynomial):
        return x
    if isinstance(x, int):
        return MotivicPolynomial.constant(x)
    return NotImplemented


ZERO_POLY = MotivicPolynomial()
ONE_POLY = MotivicPolynomial({0: 1})


def _format_monomial(e: int, c: int) -> str:
    """Format ``|c| L^e`` (sign handled by the caller)."""
    c = abs(c)
    if e == 0:
        return str(c)
    sym = "L" if e == 1 else f"L^{e}" if e > 0 else f"L^({e})"
    return sym if c == 1 else f"{c}*{sym}"


def format_polynomial(p: MotivicPolynomial) -> str:
    """Canonical text: descending powers, e.g. ``L^2 - L``."""
    items = sorted(p.items(), reverse=True)
    if not items:
        return "0"
    parts = []
    for k, (e, c) in enumerate(items):
        body = _format_monomial(e, c)
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# reduced fractions
# ---------------------------------------------------------------------------

def _reduce(num: MotivicPolynomial, den: MotivicPolynomial):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    # move powers of L into the numerator
    v = den.valuation
    if v:
        num = num.shift(-v)
        den = den.shift(-v)
    if den.degree > 0:
        g = _gcd_dense(num.dense(), den.dense())
        if len(g) > 1:
            gp = MotivicPolynomial.from_dense(g)
            num = num.divmod_exact(gp)
            den = den.divmod_exact(gp)
    cn, cd = num.content(), den.content()
    if den.leading_coefficient < 0:
        cd = -cd
    scalar = Fraction(cn, cd)
    num = num.exact_div_int(cn).scale(scalar.numerator)
    den = den.exact_div_int(cd).scale(scalar.denominator)
    return num, den


class MotivicClass:
    """A reduced fraction of Laurent polynomials in ``L``.

    The denominator is normalised to valuation 0 with a positive leading
    coefficient and is coprime to the numerator over Q, and the integer
    contents are coprime, so equal classes have identical representations.

    >>> MotivicClass(L.numerator ** 4 - 1, L.numerator ** 2 - 1)
    MotivicClass('L^2 + 1')
    >>> 1 / (L - 1) + 1 / (L + 1)
    MotivicClass('2*L/(L^2 - 1)')
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator=0, denominator=1):
        num = _coerce_poly(numerator)
        den = _coerce_poly(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be int or MotivicPolynomial")
        if den == ONE_POLY:
            self.numerator, self.denominator = num, ONE_POLY
        else:
            self.numerator, self.denominator = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.numerator = num
        obj.denominator = den
        obj._hash = None
        return obj

    @classmethod
    def from_fraction(cls, x: Rational) -> "MotivicClass":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        """True iff the class lies in Z[L, 1/L] (denominator 1)."""
        return self.denominator == ONE_POLY

    def as_polynomial(self) -> MotivicPolynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def is_effective(self) -> bool:
        return self.is_polynomial() and all(c > 0 for c in self.numerator._terms.values())

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == other.denominator:
            if self.denominator == ONE_POLY:
                return MotivicClass._raw(self.numerator + other.numerator, ONE_POLY)
            return MotivicClass(self.numerator + other.numerator, self.denominator)
        return MotivicClass(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return MotivicClass._raw(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == ONE_POLY and other.denominator == ONE_POLY:
            return MotivicClass._raw(self.numerator * other.numerator, ONE_POLY)
        return MotivicClass(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def inverse(self) -> "MotivicClass":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero class")
        return MotivicClass(self.denominator, self.numerator)

    def __truediv__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero class")
        return MotivicClass(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, q) -> Fraction:
        den = self.denominator.evaluate(q)
        if den == 0:
            raise PoleError(f"{self} has a pole at L = {q}")
        return self.numerator.evaluate(q) / den

    __call__ = evaluate

    # -- comparison / display -------------------------------------------------
    def __eq__(self, other):
        other = as_class(other, strict=False)
        if other is NotImplemented:
            return False
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_class(self)

    def __repr__(self):
        return f"MotivicClass({str(self)!r})"


def as_class(x, strict: bool = True):
    """Coerce ints, Fractions and polynomials to a ``MotivicClass``."""
    if isinstance(x, MotivicClass):
        return x
    if isinstance(x, MotivicPolynomial):
        return MotivicClass._raw(x, ONE_POLY)
    if isinstance(x, int):
        return MotivicClass._raw(MotivicPolynomial.constant(x), ONE_POLY)
    if isinstance(x, Fraction):
        return MotivicClass.from_fraction(x)
    if isinstance(x, str):
        from .parsing import parse_class

        return parse_class(x)
    if strict:
        raise TypeError(f"cannot interpret {x!r} as a motivic class")
    return NotImplemented


def _wrap(p: MotivicPolynomial) -> str:
    s = format_polynomial(p)
    return f"({s})" if len(p._terms) > 1 else s


def format_class(a: MotivicClass) -> str:
    """Canonical text, ``L^2 - L`` for polynomials and ``(num)/(den)`` otherwise."""
    if a.is_polynomial():
        return format_polynomial(a.numerator)
    return f"{_wrap(a.numerator)}/{_wrap(a.denominator)}"


L = MotivicClass._raw(MotivicPolynomial({1: 1}), ONE_POLY)
ONE = MotivicClass._raw(ONE_POLY, ONE_POLY)
ZERO = MotivicClass._raw(ZERO_POLY, ONE_POLY)


# functional spellings -----------------------------------------------------

def add(a, b) -> MotivicClass:
    return as_class(a) + as_class(b)


def mul(a, b) -> MotivicClass:
    return as_class(a) * as_class(b)


def div(a, b) -> MotivicClass:
    """``a / b``; raises ``ZeroDivisionError`` when ``b`` is zero."""
    return as_class(a) / as_class(b)


def eval_at(a, q) -> Fraction:
    """Specialise ``L -> q`` exactly.

    >>> eval_at(1 / (L - 1), 3)
    Fraction(1, 2)
    """
    return as_class(a).evaluate(q)


def is_effective(a) -> bool:
    """True iff ``a`` is a Laurent polynomial with nonnegative coefficients."""
    return as_class(a).is_effective()
