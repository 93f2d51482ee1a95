"""Kapranov zeta functions, the stack series of ``BC*``, and identity checks.

Every ``verify_*`` function returns a :class:`VerificationReport` that
records both sides of each identity that failed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, List

from .arith import L, ONE, MotivicClass, as_class
from .power import power
from .series import TruncatedSeries, geometric
from .varieties import (
    cell_min_level,
    count_at_most_parts,
    count_parts_at_most,
    gaussian_binomial,
    grassmannian_class,
    match_strata,
    partitions,
    projective_class,
    stratum_min_level,
    strata_signatures,
)

__all__ = [
    "Failure",
    "VerificationReport",
    "kapranov_zeta",
    "symmetric_power_class",
    "verify_theorem1",
    "verify_scaling",
    "verify_lemma",
    "verify_theorem2_finite",
    "verify_strata",
    "bgl_class",
    "stack_zeta_bcstar",
    "bcstar_closed_form",
    "verify_bcstar",
]


@dataclass(frozen=True)
class Failure:
    identity: str
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    failures: List[Failure] = field(default_factory=list)
    checks: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, identity: str, lhs, rhs) -> bool:
        self.checks += 1
        if lhs == rhs:
            return True
        self.failures.append(Failure(identity, str(lhs), str(rhs)))
        return False

    def merge(self, other: "VerificationReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "pass": self.passed,
            "failures": [
                {"identity": f.identity, "lhs": f.lhs, "rhs": f.rhs} for f in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        report = cls(
            data["name"],
            dict(data.get("params", {})),
            [Failure(f["identity"], f["lhs"], f["rhs"]) for f in data.get("failures", [])],
        )
        if report.passed != data["pass"]:
            raise ValueError("inconsistent report: pass flag disagrees with failures")
        return report

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} {params} ({self.checks} checks)".replace("  ", " ")


# ---------------------------------------------------------------------------
# zeta functions
# ---------------------------------------------------------------------------

def kapranov_zeta(c, order: int) -> TruncatedSeries:
    """``(1 + T + T^2 + ...)^c``; the ``T^k`` coefficient is ``[S^k X]`` for ``[X] = c``.

    >>> print(kapranov_zeta(L, 3))
    1 + L*T + L^2*T^2 + L^3*T^3 + O(T^4)
    """
    return power(geometric(order), as_class(c))


def symmetric_power_class(c, m: int) -> MotivicClass:
    return kapranov_zeta(c, m).coeff(m)


def verify_theorem1(n: int, order: int) -> VerificationReport:
    """Check that ``zeta_{L^n}`` has coefficients ``L^{in}``."""
    report = VerificationReport("theorem1", {"n": n, "order": order})
    z = kapranov_zeta(L ** n, order)
    for i in range(order + 1):
        report.check(f"[S^{i} A^{n}] = L^{i * n}", z.coeff(i), L ** (i * n))
    return report


def verify_scaling(c, order: int) -> VerificationReport:
    """``zeta_{L c}(T) = zeta_c(L T)``."""
    c = as_class(c)
    report = VerificationReport("scaling", {"class": str(c), "order": order})
    lhs = kapranov_zeta(L * c, order)
    rhs = kapranov_zeta(c, order).substitute(L, 1)
    for k in range(order + 1):
        report.check(f"T^{k}: zeta_(L*c)(T) = zeta_c(L*T)", lhs.coeff(k), rhs.coeff(k))
    return report


def verify_lemma(a: TruncatedSeries, m, s: int, order: int | None = None) -> VerificationReport:
    """``(A(L^s T))^M = (A(T)^M)|_{T -> L^s T}``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    m = as_class(m)
    if order is not None:
        a = a.truncate(order)
    scale = L ** s
    report = VerificationReport(
        "lemma", {"A": str(a), "M": str(m), "s": s, "order": a.order}
    )
    lhs = power(a.substitute(scale, 1), m)
    rhs = power(a, m).substitute(scale, 1)
    for k in range(a.order + 1):
        report.check(f"T^{k}: (A(L^{s}T))^M = A(T)^M at L^{s}T", lhs.coeff(k), rhs.coeff(k))
    return report


def verify_theorem2_finite(m: int, n: int) -> VerificationReport:
    """``[S^m P^n] = [Gr(m, m+n)]``, with the Gaussian binomial and ``L -> 1`` as extra witnesses."""
    report = VerificationReport("theorem2-finite", {"m": m, "N": n})
    sym = symmetric_power_class(projective_class(n), m)
    gr = grassmannian_class(m, m + n)
    gb = gaussian_binomial(m + n, m)
    report.check(f"[S^{m} P^{n}] = [Gr({m},{m + n})] (Schubert cells)", sym, gr)
    report.check(f"[Gr({m},{m + n})] = gaussian_binomial({m + n},{m})", gr, gb)
    report.check(f"[S^{m} P^{n}] at L=1 = C({m + n},{m})", sym.evaluate(1), comb(m + n, m))
    return report


def verify_strata(m: int, max_dim: int) -> VerificationReport:
    """Strata of ``S^m CP^inf`` versus Schubert cells of ``Gr(m, inf)``, dimension by dimension."""
    report = VerificationReport("theorem2-strata", {"m": m, "max_dim": max_dim})
    zetas = [kapranov_zeta(L ** j, m) for j in range(max_dim + 1)]
    for n in range(max_dim + 1):
        a = count_parts_at_most(m, n)
        b = count_at_most_parts(m, n)
        report.check(f"n={n}: #parts<=m = #(<=m parts)", a, b)
        pairs = match_strata(m, n)
        l_n = L ** n
        report.check(f"n={n}: #strata = #cells", len(pairs), a)
        cells = set(partitions(n, max_len=m))
        images = [lam for _, lam in pairs]
        report.check(f"n={n}: match is injective", len(set(images)), len(images))
        report.check(f"n={n}: match is onto the cells", set(images) == cells, True)
        for sig, lam in pairs:
            if sig.size > m or sig.dimension != n or lam.weight != n or len(lam) > m:
                report.check(f"n={n}: {sig} -> {lam} preserves dimension", False, True)
            report.check(
                f"{sig}: cell level = m + stratum level",
                cell_min_level(lam, m),
                m + stratum_min_level(sig),
            )
            prod = ONE
            for j, i in enumerate(sig.multiplicities, start=1):
                if i:
                    prod = prod * zetas[j].coeff(i)
            report.check(f"{sig}: prod_j [S^(i_j) C^j] = L^{n}", prod, l_n)
    return report


# ---------------------------------------------------------------------------
# BC* and BGL(m)
# ---------------------------------------------------------------------------

def _gl_order_poly(m: int) -> MotivicClass:
    """``(L^m - L^{m-1})(L^m - L^{m-2})...(L^m - 1)``."""
    out = ONE
    for i in range(1, m + 1):
        out = out * (L ** m - L ** (m - i))
    return out


def bgl_class(m: int) -> MotivicClass:
    """``[BGL(m)] = 1 / prod_{i=1..m} (L^m - L^{m-i})``.

    >>> bgl_class(1)
    MotivicClass('1/(L - 1)')
    """
    if m < 1:
        raise ValueError("m must be positive")
    return ONE / _gl_order_poly(m)


def stack_zeta_bcstar(order: int) -> List[MotivicClass]:
    """Coefficients ``c_0..c_order`` with ``c_m = L^{m^2-m} / prod_i (L^m - L^{m-i})``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return [ONE] + [L ** (m * m - m) / _gl_order_poly(m) for m in range(1, order + 1)]


def bcstar_closed_form(m: int) -> MotivicClass:
    """``L^{m(m-1)/2} / prod_{i=1..m} (L^i - 1)``."""
    den = ONE
    for i in range(1, m + 1):
        den = den * (L ** i - 1)
    return L ** (m * (m - 1) // 2) / den


def verify_bcstar(order: int) -> VerificationReport:
    if order < 1:
        raise ValueError("order must be at least 1")
    report = VerificationReport("bcstar", {"order": order})
    c = stack_zeta_bcstar(order)
    report.check("c_0 = 1", c[0], ONE)
    for m in range(1, order + 1):
        report.check(f"c_{m} = L^{m * m - m} [BGL({m})]", c[m], L ** (m * m - m) * bgl_class(m))
        report.check(
            f"c_{m} (L^{m} - 1) = c_{m - 1} L^{m - 1}",
            c[m] * (L ** m - 1),
            c[m - 1] * L ** (m - 1),
        )
        report.check(f"c_{m} = closed form", c[m], bcstar_closed_form(m))
    return report
