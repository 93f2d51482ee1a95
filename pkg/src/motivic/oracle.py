"""Finite-field shadow of the Kapranov zeta function.

Specialising ``L -> q`` turns classes of cellular varieties into point
counts.  Effective zero-cycles of degree ``m`` over ``F_q`` are then
counted three independent ways:

* the Weil zeta ``exp(sum N_d t^d / d)`` over exact rationals;
* Moebius inversion to closed points and ``prod_d (1 - t^d)^(-C_d)``;
* explicit enumeration of Frobenius orbits of geometric points in small
  field tables (:mod:`motivic.fields`), for a handful of tiny spaces.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from itertools import combinations_with_replacement, product
from typing import List, Sequence, Tuple

from .arith import MotivicClass, as_class
from .fields import small_field
from .varieties import affine_class, grassmannian_class, projective_class
from .zeta import VerificationReport, kapranov_zeta

__all__ = [
    "InconsistentTableError",
    "PointCountTable",
    "mobius",
    "counts_from_class",
    "closed_points",
    "cycles_from_closed_points",
    "weil_coefficients",
    "geometric_points",
    "frobenius_orbits",
    "brute_force_cycles",
    "stable_multisets_literal",
    "parse_space",
    "space_class",
    "crosscheck_kapranov_weil",
]


class InconsistentTableError(ValueError):
    """Point counts that no variety over ``F_q`` can have."""


@dataclass(frozen=True)
class PointCountTable:
    """``q`` and ``N_d = |X(F_{q^d})|`` for ``d = 1..D``."""

    q: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise InconsistentTableError("point counts must be nonnegative")

    @property
    def depth(self) -> int:
        return len(self.counts)

    def to_json(self) -> str:
        return json.dumps({"q": self.q, "counts": list(self.counts)})

    @classmethod
    def from_json(cls, text: str) -> "PointCountTable":
        data = json.loads(text)
        return cls(int(data["q"]), tuple(data["counts"]))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs a positive integer")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def counts_from_class(c, q: int, depth: int) -> PointCountTable:
    """``N_d = c(q^d)`` for an effective polynomial class."""
    c = as_class(c)
    if not c.is_effective() or (not c.is_zero() and c.numerator.valuation < 0):
        raise ValueError(f"{c} is not an effective polynomial class in L")
    counts = []
    for d in range(1, depth + 1):
        v = c.evaluate(q ** d)
        counts.append(int(v))
    return PointCountTable(q, tuple(counts))


def closed_points(table: PointCountTable) -> List[int]:
    """Closed points of each degree: ``C_d = (1/d) sum_{e|d} mu(d/e) N_e``."""
    out = []
    for d in range(1, table.depth + 1):
        total = sum(
            mobius(d // e) * table.counts[e - 1] for e in range(1, d + 1) if d % e == 0
        )
        if total % d or total < 0:
            raise InconsistentTableError(
                f"closed-point count of degree {d} is {Fraction(total, d)}"
            )
        out.append(total // d)
    return out


def cycles_from_closed_points(closed: Sequence[int], m: int) -> int:
    """Coefficient of ``t^m`` in ``prod_d (1 - t^d)^(-C_d)``."""
    if len(closed) < m:
        raise ValueError(f"need closed-point counts up to degree {m}")
    series = [1] + [0] * m
    for d in range(1, m + 1):
        c = closed[d - 1]
        if not c:
            continue
        # (1 - t^d)^(-c) = sum_j C(c + j - 1, j) t^(d j)
        factor = [comb(c + j - 1, j) for j in range(m // d + 1)]
        new = [0] * (m + 1)
        for k, s in enumerate(series):
            if s:
                for j, f in enumerate(factor):
                    if k + d * j > m:
                        break
                    new[k + d * j] += s * f
        series = new
    return series[m]


def weil_coefficients(table: PointCountTable, m: int) -> int:
    """Coefficient of ``t^m`` in ``exp(sum_d N_d t^d / d)``.

    With ``Z = exp(P)`` one has ``k z_k = sum_{d=1..k} N_d z_{k-d}``.
    """
    if table.depth < m:
        raise ValueError(f"table depth {table.depth} is below the degree {m}")
    z = [Fraction(1)]
    for k in range(1, m + 1):
        zk = sum(table.counts[d - 1] * z[k - d] for d in range(1, k + 1)) / k
        if zk.denominator != 1:
            raise InconsistentTableError(f"Weil zeta coefficient of t^{k} is {zk}")
        z.append(zk)
    return int(z[m])


# ---------------------------------------------------------------------------
# brute force over explicit field tables
# ---------------------------------------------------------------------------

_SPACE = re.compile(r"^\s*(?:([AP])\s*\^\s*(\d+)|Gr\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))\s*$")


def parse_space(text: str) -> Tuple[str, Tuple[int, ...]]:
    """``"A^2" -> ("A", (2,))``, ``"Gr(2,4)" -> ("Gr", (2, 4))``."""
    m = _SPACE.match(text)
    if not m:
        raise ValueError(f"unknown space {text!r}; expected A^n, P^N or Gr(m,N)")
    if m.group(1):
        return m.group(1), (int(m.group(2)),)
    return "Gr", (int(m.group(3)), int(m.group(4)))


def space_class(text: str) -> MotivicClass:
    kind, params = parse_space(text)
    if kind == "A":
        return affine_class(*params)
    if kind == "P":
        return projective_class(*params)
    return grassmannian_class(*params)


def _points_over(kind: str, dim: int, field) -> List[Tuple[int, ...]]:
    elems = range(field.size)
    if kind == "A":
        return list(product(elems, repeat=dim))
    # normalised projective coordinates: first nonzero entry is 1
    pts = []
    for lead in range(dim + 1):
        for tail in product(elems, repeat=dim - lead):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def geometric_points(kind: str, dim: int, q: int, max_degree: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """Points of exact degree ``e <= max_degree``, each as ``(e, coords in F_{q^e})``."""
    out = []
    for e in range(1, max_degree + 1):
        field = small_field(q ** e)
        for pt in _points_over(kind, dim, field):
            if _orbit_size(pt, field, q) == e:
                out.append((e, pt))
    return out


def _frob(pt, field, q):
    return tuple(field.pow(x, q) for x in pt)


def _orbit_size(pt, field, q) -> int:
    size = 1
    cur = _frob(pt, field, q)
    while cur != pt:
        cur = _frob(cur, field, q)
        size += 1
    return size


def frobenius_orbits(kind: str, dim: int, q: int, max_degree: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Frobenius orbits of geometric points of degree ``<= max_degree``."""
    seen = set()
    orbits = []
    for e, pt in geometric_points(kind, dim, q, max_degree):
        if (e, pt) in seen:
            continue
        field = small_field(q ** e)
        orbit = [pt]
        cur = _frob(pt, field, q)
        while cur != pt:
            orbit.append(cur)
            cur = _frob(cur, field, q)
        for x in orbit:
            seen.add((e, x))
        orbits.append(tuple(orbit))
    return orbits


_BRUTE_SPACES = {("A", 1), ("A", 2), ("P", 1), ("P", 2)}


def _check_brute_range(space: str, q: int, m: int):
    kind, params = parse_space(space)
    if kind == "Gr" or (kind, params[0]) not in _BRUTE_SPACES:
        raise ValueError(f"brute force supports A^1, A^2, P^1, P^2; got {space!r}")
    if q not in (2, 3):
        raise ValueError(f"brute force supports q in {{2, 3}}; got {q}")
    if not 0 <= m <= 3:
        raise ValueError(f"brute force supports m <= 3; got {m}")
    return kind, params[0]


def brute_force_cycles(space: str, q: int, m: int) -> int:
    """Frobenius-stable ``m``-multisets of geometric points, by explicit enumeration.

    A stable multiset is a multiset of whole Frobenius orbits, so this picks
    orbits (found by iterating ``x -> x^q`` in the field tables) with
    repetition until their sizes add up to ``m``.
    """
    kind, dim = _check_brute_range(space, q, m)
    if m == 0:
        return 1
    sizes = sorted(len(o) for o in frobenius_orbits(kind, dim, q, m))

    def rec(start: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for idx in range(start, len(sizes)):
            if sizes[idx] > remaining:
                break
            total += rec(idx, remaining - sizes[idx])
        return total

    return rec(0, m)


def stable_multisets_literal(space: str, q: int, m: int) -> int:
    """Count ``m``-multisets of geometric points that Frobenius maps to themselves.

    Enumerates every multiset, so it is only practical for the smallest cases.
    """
    kind, dim = _check_brute_range(space, q, m)
    pts = geometric_points(kind, dim, q, m)
    fields = {e: small_field(q ** e) for e in range(1, m + 1)}
    image = {(e, pt): (e, _frob(pt, fields[e], q)) for e, pt in pts}
    count = 0
    for combo in combinations_with_replacement(pts, m):
        if sorted(image[p] for p in combo) == sorted(combo):
            count += 1
    return count


# ---------------------------------------------------------------------------
# motivic versus finite-field channels
# ---------------------------------------------------------------------------

def crosscheck_kapranov_weil(c, q: int, m: int) -> VerificationReport:
    """``[S^k X]`` at ``L = q`` against the Weil and closed-point channels, ``k <= m``."""
    c = as_class(c)
    report = VerificationReport("kapranov-weil", {"class": str(c), "q": q, "m": m})
    table = counts_from_class(c, q, max(m, 1))
    closed = closed_points(table)
    for v in closed:
        report.check("closed-point count is a nonnegative integer", v >= 0, True)
    zeta = kapranov_zeta(c, m)
    for k in range(m + 1):
        motivic = zeta.coeff(k).evaluate(q)
        weil = weil_coefficients(table, k)
        census = cycles_from_closed_points(closed, k)
        report.check(f"[S^{k} X](q={q}) = Weil coefficient", motivic, weil)
        report.check(f"Weil coefficient = closed-point census (k={k})", weil, census)
    return report
