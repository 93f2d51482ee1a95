"""Symmetric powers of projective space against Grassmannians.

The classes agree, and so do the cell structures: strata of S^m P^inf
correspond to Schubert cells of Gr(m, inf) dimension by dimension.
"""
from motivic import (
    cell_min_level,
    gaussian_binomial,
    grassmannian_class,
    match_strata,
    projective_class,
    schubert_count,
    stratum_min_level,
)
from motivic.zeta import symmetric_power_class

for m, n in [(2, 2), (2, 3), (3, 3)]:
    sym = symmetric_power_class(projective_class(n), m)
    gr = grassmannian_class(m, m + n)
    print(f"[S^{m} P^{n}] = {sym}")
    print(f"[Gr({m},{m + n})] = {gr}   equal: {sym == gr == gaussian_binomial(m + n, m)}")

m = 3
for n in range(6):
    print(f"dimension {n}: {schubert_count(m, n)} cells")
    for sig, lam in match_strata(m, n):
        print(f"   stratum {sig} from P^{stratum_min_level(sig)}  <->  cell {lam} from Gr({m},{cell_min_level(lam, m)})")
