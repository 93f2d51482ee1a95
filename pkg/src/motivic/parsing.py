"""Text formats for motivic classes and truncated series.

Class expressions use integer literals, the symbol ``L``, ``+ - * / ^`` and
parentheses.  Series expressions may also use ``T`` and a trailing
``O(T^k)`` marker, which declares truncation order ``k - 1``.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .arith import MotivicClass, ONE, ZERO, L, as_class, format_class

__all__ = ["ParseError", "parse_class", "format_class", "parse_series", "format_series"]


class ParseError(ValueError):
    """Syntax error in a class or series expression."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([LTO])|([-+*/^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("sym", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _TPoly:
    """Polynomial in T with MotivicClass coefficients (parser intermediate)."""

    __slots__ = ("c",)

    def __init__(self, c: Dict[int, MotivicClass]):
        self.c = {k: v for k, v in c.items() if not v.is_zero()}

    @classmethod
    def const(cls, a):
        return cls({0: as_class(a)})

    def is_t_free(self):
        return all(k == 0 for k in self.c)

    def __add__(self, o):
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, ZERO) + v
        return _TPoly(out)

    def __neg__(self):
        return _TPoly({k: -v for k, v in self.c.items()})

    def __mul__(self, o):
        out: Dict[int, MotivicClass] = {}
        for i, a in self.c.items():
            for j, b in o.c.items():
                out[i + j] = out.get(i + j, ZERO) + a * b
        return _TPoly(out)


class _BigO:
    __slots__ = ("order",)

    def __init__(self, order: int):
        self.order = order


class _Parser:
    def __init__(self, text: str, allow_series: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_series = allow_series
        self.big_o: Optional[int] = None

    # token helpers
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            self.fail(f"expected {value!r}", tok)
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{msg}, found {what}", tok[2], self.text)

    # grammar
    def parse(self) -> _TPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr(top=True)
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self, top=False) -> _TPoly:
        value = self.term_or_o(top)
        if isinstance(value, _BigO):
            value = _TPoly({})
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term_or_o(top)
            if isinstance(rhs, _BigO):
                continue
            value = value + (rhs if op == "+" else -rhs)
        return value

    def term_or_o(self, top):
        if self.peek()[:2] == ("sym", "O"):
            tok = self.take()
            if not (top and self.allow_series):
                self.fail("O(...) marker only allowed at top level of a series", tok)
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            keys = list(inner.c)
            if len(keys) != 1 or keys[0] < 1 or inner.c[keys[0]] != ONE:
                raise ParseError("O(...) must contain T^k with k >= 1", tok[2], self.text)
            k = keys[0]
            self.big_o = k if self.big_o is None else min(self.big_o, k)
            return _BigO(k)
        return self.term()

    def term(self) -> _TPoly:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs.is_t_free():
                    raise ParseError("division by an expression involving T", tok[2], self.text)
                d = rhs.c.get(0, ZERO)
                if d.is_zero():
                    raise ParseError("division by zero", tok[2], self.text)
                inv = d.inverse()
                value = _TPoly({k: v * inv for k, v in value.c.items()})
        return value

    def unary(self) -> _TPoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            v = self.unary()
            return -v if tok[1] == "-" else v
        return self.power()

    def power(self) -> _TPoly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            tok = self.take()
            n = self.exponent()
            if n < 0:
                if not base.is_t_free() or base.c.get(0, ZERO).is_zero():
                    raise ParseError("negative power of a non-invertible expression", tok[2], self.text)
                return _TPoly.const(base.c[0] ** n)
            result = _TPoly.const(ONE)
            for _ in range(n):
                result = result * base
            return result
        return base

    def exponent(self) -> int:
        paren = False
        if self.peek()[1] == "(" and self.peek()[0] == "op":
            self.take()
            paren = True
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in ("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        tok = self.take()
        if tok[0] != "int":
            self.fail("expected integer exponent", tok)
        if paren:
            self.expect(")")
        return sign * int(tok[1])

    def atom(self) -> _TPoly:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return _TPoly.const(int(val))
        if kind == "sym" and val == "L":
            return _TPoly.const(L)
        if kind == "sym" and val == "T":
            if not self.allow_series:
                raise ParseError("symbol T is not allowed in a class expression", pos, self.text)
            return _TPoly({1: ONE})
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected a number, L, T or '('", tok)


def parse_class(text: str) -> MotivicClass:
    """Parse a class expression.

    >>> parse_class("(L^4-1)/(L^2-1)")
    MotivicClass('L^2 + 1')
    """
    value = _Parser(text, allow_series=False).parse()
    return value.c.get(0, ZERO)


def parse_series(text: str, order: Optional[int] = None):
    """Parse ``1 + L*T + L^2*T^2 + O(T^3)`` into a ``TruncatedSeries``.

    The truncation order comes from the ``O(T^k)`` marker (order ``k-1``);
    without one, ``order`` is used, falling back to the polynomial degree.
    When both are given the smaller wins.
    """
    from .series import TruncatedSeries

    parser = _Parser(text, allow_series=True)
    value = parser.parse()
    degree = max(value.c, default=0)
    candidates = [o for o in (order, None if parser.big_o is None else parser.big_o - 1) if o is not None]
    n = min(candidates) if candidates else degree
    if n < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries([value.c.get(k, ZERO) for k in range(n + 1)])


def _series_coeff(c: MotivicClass) -> Tuple[int, str]:
    """Return (sign, text) for a series coefficient."""
    if c.is_polynomial():
        terms = c.numerator.items()
        if len(terms) == 1:
            e, k = terms[0]
            return (1 if k > 0 else -1), format_class(c if k > 0 else -c)
        return 1, f"({format_class(c)})"
    return 1, f"({format_class(c)})"


def format_series(s) -> str:
    """Render a ``TruncatedSeries``; the ``O(T^k)`` marker is always printed.

    >>> from .series import TruncatedSeries
    >>> format_series(TruncatedSeries([1, L, L * L]))
    '1 + L*T + L^2*T^2 + O(T^3)'
    """
    parts = []
    for k, c in enumerate(s.coefficients):
        if c.is_zero():
            continue
        sign, body = _series_coeff(c)
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if mono:
            body = mono if body == "1" else f"{body}*{mono}"
        if not parts:
            parts.append(body if sign > 0 else f"-{body}")
        else:
            parts.append((" + " if sign > 0 else " - ") + body)
    if not parts:
        parts.append("0")
    parts.append(" + O(T)" if s.order == 0 else f" + O(T^{s.order + 1})")
    return "".join(parts)
