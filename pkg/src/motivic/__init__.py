"""Exact power-structure arithmetic over motivic classes in ``Z[L, L^-1]``.

Classes are Laurent polynomials in ``L`` or reduced fractions of them;
series are truncated power series in ``T`` with class coefficients.
"""
from .arith import (
    L,
    ONE,
    ZERO,
    MotivicClass,
    MotivicPolynomial,
    PoleError,
    add,
    as_class,
    div,
    eval_at,
    is_effective,
    mul,
)
from .parsing import ParseError, format_class, format_series, parse_class, parse_series
from .power import (
    ExponentVector,
    PartitionVector,
    UnsupportedExponentError,
    enumerate_partition_vectors,
    euler_factorize,
    expand_factor,
    power,
    power_finite,
)
from .series import TruncatedSeries, geometric, s_add, s_coeff, s_invert, s_mul, s_substitute
from .varieties import (
    Partition,
    StrataSignature,
    affine_class,
    cell_min_level,
    gaussian_binomial,
    grassmannian_class,
    match_strata,
    partitions,
    projective_class,
    schubert_count,
    strata_signatures,
    stratum_min_level,
)
from .zeta import (
    VerificationReport,
    bgl_class,
    kapranov_zeta,
    stack_zeta_bcstar,
    verify_bcstar,
    verify_lemma,
    verify_scaling,
    verify_strata,
    verify_theorem1,
    verify_theorem2_finite,
)
from .oracle import (
    PointCountTable,
    brute_force_cycles,
    closed_points,
    counts_from_class,
    crosscheck_kapranov_weil,
    cycles_from_closed_points,
    weil_coefficients,
)

__version__ = "0.1.0"
