"""Classes of cellular varieties and the cell/strata combinatorics of
``S^m CP^inf`` versus ``Gr(m, inf)``.

Schubert cells of ``Gr(m, N)`` are indexed here by partitions with at most
``m`` parts, each at most ``N - m``; the cell of ``lambda`` is an affine
space of dimension ``|lambda|``.  Strata of ``S^m CP^inf`` are products
``prod_j S^{i_j} C^j`` recorded by their multiplicity signature.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .arith import MotivicClass, MotivicPolynomial, ONE_POLY, as_class
from .power import enumerate_partition_vectors

__all__ = [
    "Partition",
    "StrataSignature",
    "affine_class",
    "projective_class",
    "gaussian_binomial",
    "grassmannian_class",
    "partitions",
    "partitions_in_box",
    "count_parts_at_most",
    "count_at_most_parts",
    "schubert_count",
    "strata_signatures",
    "match_strata",
    "signature_to_partition",
    "stratum_min_level",
    "cell_min_level",
]


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p >= k) for k in range(1, self.parts[0] + 1))
        )

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class StrataSignature:
    """Multiplicities ``(i_1, i_2, ...)`` of the stratum ``prod_j S^{i_j} C^j``.

    Trailing zeros are dropped, so the point stratum ``S^0`` is ``()``.
    """

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.multiplicities)
        if any(x < 0 for x in m):
            raise ValueError("multiplicities must be nonnegative")
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "multiplicities", m)

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    @property
    def dimension(self) -> int:
        return sum(j * i for j, i in enumerate(self.multiplicities, start=1))

    def __str__(self):
        return "[" + ",".join(map(str, self.multiplicities)) + "]"


def affine_class(n: int) -> MotivicClass:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return as_class(MotivicPolynomial.monomial(n))


def projective_class(n: int) -> MotivicClass:
    """``[P^n] = 1 + L + ... + L^n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return as_class(MotivicPolynomial({i: 1 for i in range(n + 1)}))


def gaussian_binomial(n: int, m: int) -> MotivicClass:
    """``prod_{i=1..m} (L^{n-m+i} - 1) / (L^i - 1)`` by exact polynomial division.

    >>> gaussian_binomial(4, 2)
    MotivicClass('L^4 + L^3 + 2*L^2 + L + 1')
    """
    if not 0 <= m <= n:
        raise ValueError(f"gaussian_binomial needs 0 <= m <= n, got n={n}, m={m}")
    num = ONE_POLY
    den = ONE_POLY
    for i in range(1, m + 1):
        num = num * MotivicPolynomial({n - m + i: 1, 0: -1})
        den = den * MotivicPolynomial({i: 1, 0: -1})
    return as_class(num.divmod_exact(den))


def partitions(
    n: int, max_part: Optional[int] = None, max_len: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    max_part = n if max_part is None else max_part
    max_len = n if max_len is None else max_len

    def rec(remaining, cap, room, prefix):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        if room == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            if p * room < remaining:
                break
            prefix.append(p)
            yield from rec(remaining - p, p, room - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_len, [])


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    for n in range(rows * cols + 1):
        yield from partitions(n, max_part=cols, max_len=rows)


def grassmannian_class(m: int, n: int) -> MotivicClass:
    """``[Gr(m, n)]`` as the sum of its Schubert cells ``L^{|lambda|}``."""
    if not 0 <= m <= n:
        raise ValueError(f"grassmannian_class needs 0 <= m <= n, got m={m}, n={n}")
    terms = {}
    for lam in partitions_in_box(m, n - m):
        terms[lam.weight] = terms.get(lam.weight, 0) + 1
    return as_class(MotivicPolynomial(terms))


def count_parts_at_most(m: int, n: int) -> int:
    """Partitions of ``n`` into summands not exceeding ``m`` (coin-change table)."""
    table = [1] + [0] * n
    for part in range(1, m + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def count_at_most_parts(m: int, n: int) -> int:
    """Partitions of ``n`` into at most ``m`` summands.

    Uses ``p(n, k) = p(n-1, k-1) + p(n-k, k)`` for exactly ``k`` parts.
    """
    exact = [[0] * (m + 1) for _ in range(n + 1)]
    exact[0][0] = 1
    for total in range(1, n + 1):
        for k in range(1, min(m, total) + 1):
            exact[total][k] = exact[total - 1][k - 1] + exact[total - k][k]
    return sum(exact[n])


def schubert_count(m: int, n: int) -> int:
    """Number of ``n``-dimensional Schubert cells of ``Gr(m, inf)``."""
    if m < 1 or n < 0:
        raise ValueError("schubert_count needs m >= 1, n >= 0")
    a = count_parts_at_most(m, n)
    b = count_at_most_parts(m, n)
    if a != b:
        raise ArithmeticError(f"conjugate partition counts disagree for m={m}, n={n}: {a} != {b}")
    return a


def strata_signatures(m: int, n: int) -> List[StrataSignature]:
    """Strata of ``S^m CP^inf`` of dimension ``n``.

    Signatures with ``sum i_j <= m`` and ``sum j*i_j = n``, lexicographically
    decreasing in ``(i_1, i_2, ...)``.
    """
    if m < 1 or n < 0:
        raise ValueError("strata_signatures needs m >= 1, n >= 0")
    return [
        StrataSignature(v.multiplicities) for v in enumerate_partition_vectors(n, n, m)
    ]


def signature_to_partition(sig: StrataSignature) -> Partition:
    """The partition with ``i_j`` parts equal to ``j``."""
    parts: List[int] = []
    for j in range(len(sig.multiplicities), 0, -1):
        parts.extend([j] * sig.multiplicities[j - 1])
    return Partition(tuple(parts))


def match_strata(m: int, n: int) -> List[Tuple[StrataSignature, Partition]]:
    return [(sig, signature_to_partition(sig)) for sig in strata_signatures(m, n)]


def stratum_min_level(sig: StrataSignature) -> int:
    """Smallest ``N`` with the stratum inside ``S^m P^N``."""
    return len(sig.multiplicities)


def cell_min_level(lam: Partition, m: int) -> int:
    """Smallest ``N`` with the Schubert cell of ``lam`` inside ``Gr(m, N)``."""
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} parts")
    return m + (lam.parts[0] if lam.parts else 0)
