"""Seeded verification suites over parameter grids.

Each suite returns a list of :class:`~motivic.zeta.VerificationReport`;
``run_all`` is the full acceptance grid.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from .arith import L, ONE, MotivicClass, MotivicPolynomial, as_class
from .oracle import brute_force_cycles, crosscheck_kapranov_weil
from .power import euler_factorize, power, power_finite
from .series import TruncatedSeries
from .varieties import gaussian_binomial, grassmannian_class, projective_class
from .zeta import (
    VerificationReport,
    bgl_class,
    stack_zeta_bcstar,
    verify_bcstar,
    verify_lemma,
    verify_scaling,
    verify_strata,
    verify_theorem1,
    verify_theorem2_finite,
)

__all__ = [
    "random_effective_polynomial",
    "random_series",
    "random_exponent",
    "suite_theorem1",
    "suite_scaling",
    "suite_lemma",
    "suite_properties",
    "suite_power_finite",
    "suite_grassmannian_classes",
    "suite_strata",
    "suite_theorem2_finite",
    "suite_bcstar",
    "suite_oracle",
    "SUITES",
    "run_all",
]

SCALING_CLASSES = ("1", "L", "L^2", "1+L", "1+L+L^2")
ORACLE_CLASSES = {
    "1": ONE,
    "L": L,
    "L^2": L ** 2,
    "L+1": L + 1,
    "[P^1]": projective_class(1),
    "[P^2]": projective_class(2),
    "[Gr(2,4)]": grassmannian_class(2, 4),
}
BRUTE_FORCE_FIXTURES = (("A^1", 2, 2, 4), ("P^1", 2, 2, 7), ("P^1", 2, 3, 15))


def random_effective_polynomial(rng: random.Random, max_degree: int = 2, max_coeff: int = 2) -> MotivicClass:
    terms = {e: rng.randint(0, max_coeff) for e in range(max_degree + 1)}
    return as_class(MotivicPolynomial(terms))


def random_series(rng: random.Random, order: int, max_t_degree: int = 4) -> TruncatedSeries:
    """``1 + a_1 T + ... + a_d T^d`` with effective coefficients, ``d <= max_t_degree``."""
    d = rng.randint(1, max_t_degree)
    coeffs = [ONE] + [random_effective_polynomial(rng) for _ in range(d)]
    return TruncatedSeries(coeffs, order)


def random_exponent(rng: random.Random, max_support: int = 3, span: int = 2, max_coeff: int = 2) -> MotivicClass:
    """A Laurent polynomial with at most ``max_support`` terms and small coefficients."""
    k = rng.randint(1, max_support)
    exps = rng.sample(range(-span, span + 1), k)
    terms = {e: rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c]) for e in exps}
    return as_class(MotivicPolynomial(terms))


# ---------------------------------------------------------------------------

def suite_theorem1(max_n: int = 5, order: int = 16, n: int | None = None) -> List[VerificationReport]:
    ns = [n] if n is not None else range(0, max_n + 1)
    return [verify_theorem1(k, order) for k in ns]


def suite_scaling(classes: Sequence[str] = SCALING_CLASSES, order: int = 12) -> List[VerificationReport]:
    return [verify_scaling(as_class(c), order) for c in classes]


def suite_lemma(trials: int = 200, seed: int = 0, order: int = 10, max_s: int = 3) -> List[VerificationReport]:
    rng = random.Random(seed)
    combined = VerificationReport("lemma-random", {"trials": trials, "seed": seed, "order": order})
    for _ in range(trials):
        a = random_series(rng, order)
        m = random_exponent(rng)
        s = rng.randint(0, max_s)
        combined.merge(verify_lemma(a, m, s))
    return [combined]


def check_properties(report: VerificationReport, a: TruncatedSeries, b: TruncatedSeries,
                     m: MotivicClass, n: MotivicClass, ell: int) -> None:
    """All seven power-structure axioms plus the factorisation round trip."""
    order = a.order
    one = TruncatedSeries.one(order)
    pa_m = power(a, m)
    pa_n = power(a, n)
    tag = f"A={a} B={b} M={m} N={n} l={ell}"
    report.check(f"P1 (A)^0 = 1: {tag}", power(a, 0), one)
    report.check(f"P2 (A)^1 = A: {tag}", power(a, 1), a)
    report.check(f"P3 (AB)^M = A^M B^M: {tag}", power(a * b, m), pa_m * power(b, m))
    report.check(f"P4 (A)^(M+N) = A^M A^N: {tag}", power(a, m + n), pa_m * pa_n)
    report.check(f"P4 (A)^(-M) = 1/A^M: {tag}", power(a, -m), pa_m.invert())
    report.check(f"P5 (A)^(MN) = (A^N)^M: {tag}", power(a, m * n), power(pa_n, m))
    t = TruncatedSeries([1, 1], order)
    pt = power(t, m)
    report.check(f"P6 (1+T)^M = 1 + M T + ...: {tag}", pt.coefficients[:2], (ONE, m))
    report.check(
        f"P7 A(T^l)^M = A^M(T^l): {tag}",
        power(a.substitute(1, ell), m),
        pa_m.substitute(1, ell),
    )
    report.check(f"round trip euler_factorize: {tag}", euler_factorize(a).expand(), a)


def suite_properties(trials: int = 500, seed: int = 0, max_order: int = 10) -> List[VerificationReport]:
    rng = random.Random(seed)
    report = VerificationReport("power-properties", {"trials": trials, "seed": seed, "max_order": max_order})
    for _ in range(trials):
        order = rng.randint(1, max_order)
        a = random_series(rng, order)
        b = random_series(rng, order)
        m = random_exponent(rng)
        n = random_exponent(rng)
        ell = rng.randint(1, 3)
        check_properties(report, a, b, m, n, ell)
    return [report]


def suite_power_finite(draws: int = 100, seed: int = 0, max_m: int = 6, order: int = 8) -> List[VerificationReport]:
    rng = random.Random(seed)
    report = VerificationReport("power-finite", {"draws": draws, "seed": seed, "max_m": max_m, "order": order})
    for _ in range(draws):
        r = rng.randint(1, 4)
        a = [rng.randint(-3, 3) for _ in range(r)]
        series = TruncatedSeries([1] + a, order)
        for m in range(max_m + 1):
            report.check(
                f"power_finite({a}, {m}) = (1 + sum a_i T^i)^{m}",
                power_finite(a, m, order),
                power(series, m),
            )
    return [report]


def suite_grassmannian_classes(max_total: int = 12) -> List[VerificationReport]:
    """``[S^m P^N] = [Gr(m, m+N)] = gaussian_binomial(m+N, m)`` for ``m + N <= max_total``."""
    finite = VerificationReport("theorem2-finite-grid", {"max_total": max_total})
    for m in range(0, max_total + 1):
        for n in range(0, max_total - m + 1):
            finite.merge(verify_theorem2_finite(m, n))
    for big in range(0, max_total + 1):
        for m in range(0, big + 1):
            finite.check(
                f"gaussian_binomial({big},{m}) symmetric",
                gaussian_binomial(big, m),
                gaussian_binomial(big, big - m),
            )
    return [finite]


def suite_strata(max_m: int = 8, max_dim: int = 40) -> List[VerificationReport]:
    strata = VerificationReport("theorem2-strata-grid", {"max_m": max_m, "max_dim": max_dim})
    for m in range(1, max_m + 1):
        strata.merge(verify_strata(m, max_dim))
    return [strata]


def suite_theorem2_finite(max_total: int = 12, max_m: int = 8, max_dim: int = 40) -> List[VerificationReport]:
    return suite_grassmannian_classes(max_total) + suite_strata(max_m, max_dim)


def suite_bcstar(order: int = 8) -> List[VerificationReport]:
    report = verify_bcstar(order)
    c = stack_zeta_bcstar(max(order, 2))
    # c_1 and c_2 assembled from unreduced factors, independent of the closed forms
    report.check("c_1 = 1/(L-1)", c[1], ONE / (L - 1))
    report.check("c_2 = L^2/((L^2-L)(L^2-1))", c[2], L ** 2 / ((L ** 2 - L) * (L ** 2 - 1)))
    report.check("[BGL(2)] at q=2 is 1/|GL(2,F_2)|", bgl_class(2).evaluate(2), Fraction(1, 6))
    return [report]


def suite_oracle(qs: Sequence[int] = (2, 3, 4, 5), max_m: int = 5) -> List[VerificationReport]:
    grid = VerificationReport("oracle-grid", {"q": list(qs), "max_m": max_m})
    for name, c in ORACLE_CLASSES.items():
        for q in qs:
            grid.merge(crosscheck_kapranov_weil(c, q, max_m))
    brute = VerificationReport("oracle-brute-force", {})
    for space, q, m, expected in BRUTE_FORCE_FIXTURES:
        brute.check(f"|S^{m} {space}(F_{q})| by enumeration", brute_force_cycles(space, q, m), expected)
    return [grid, brute]


SUITES: Dict[str, Callable[..., List[VerificationReport]]] = {
    "theorem1": suite_theorem1,
    "scaling": suite_scaling,
    "lemma": suite_lemma,
    "properties": lambda trials=500, seed=0: suite_properties(trials, seed) + suite_power_finite(seed=seed),
    "theorem2-finite": suite_theorem2_finite,
    "bcstar": suite_bcstar,
    "oracle": suite_oracle,
}


def run_all(seed: int = 0) -> List[VerificationReport]:
    """The full acceptance grid with default sizes."""
    reports: List[VerificationReport] = []
    reports += suite_theorem1()
    reports += suite_scaling()
    reports += suite_lemma(seed=seed)
    reports += suite_properties(seed=seed)
    reports += suite_power_finite(seed=seed)
    reports += suite_theorem2_finite()
    reports += suite_bcstar()
    reports += suite_oracle()
    return reports
