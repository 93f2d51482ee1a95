"""Tiny finite fields as explicit lookup tables.

Elements of ``F_{p^k}`` are ints ``0 .. p^k - 1`` whose base-``p`` digits are
the coefficients of a polynomial in ``x`` (lowest digit = constant term),
reduced modulo a fixed irreducible polynomial.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

__all__ = ["SmallField", "small_field", "MODULI"]

# monic moduli, ascending coefficients without the leading 1
MODULI = {
    (2, 1): (0,),
    (3, 1): (0,),
    (2, 2): (1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0),  # x^3 + x + 1
    (3, 2): (1, 0),  # x^2 + 1
    (3, 3): (1, 2, 0),  # x^3 + 2x + 1
}


class SmallField:
    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.size = p ** k
        self.modulus = tuple(modulus)
        self._mul = self._build_mul()
        self._add = [
            [self._encode([(a + b) % p for a, b in zip(self._digits(x), self._digits(y))])
             for y in range(self.size)]
            for x in range(self.size)
        ]
        for x in range(1, self.size):
            if 1 not in self._mul[x]:
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self._frob = [self.pow(x, p) for x in range(self.size)]

    def _digits(self, x: int) -> List[int]:
        out = []
        for _ in range(self.k):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        x = 0
        for d in reversed(digits):
            x = x * self.p + d
        return x

    def _build_mul(self):
        p, k = self.p, self.k
        table = [[0] * self.size for _ in range(self.size)]
        for x in range(self.size):
            dx = self._digits(x)
            for y in range(x, self.size):
                dy = self._digits(y)
                prod = [0] * (2 * k - 1)
                for i, a in enumerate(dx):
                    if a:
                        for j, b in enumerate(dy):
                            prod[i + j] += a * b
                # reduce with x^k = -(modulus)
                for deg in range(2 * k - 2, k - 1, -1):
                    c = prod[deg] % p
                    if c:
                        for i, mi in enumerate(self.modulus):
                            prod[deg - k + i] -= c * mi
                    prod[deg] = 0
                z = self._encode([c % p for c in prod[:k]])
                table[x][y] = table[y][x] = z
        return table

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def pow(self, x: int, n: int) -> int:
        result = 1
        for _ in range(n):
            result = self._mul[result][x]
        return result

    def frobenius(self, x: int) -> int:
        """``x -> x^p``."""
        return self._frob[x]

    def __repr__(self):
        return f"SmallField({self.size})"


@lru_cache(maxsize=None)
def small_field(q: int) -> SmallField:
    for (p, k), mod in MODULI.items():
        if p ** k == q:
            return SmallField(p, k, mod)
    raise ValueError(f"no table for F_{q}; available: {sorted(p ** k for p, k in MODULI)}")
