"""Kapranov zeta functions and the symmetric-power identities they encode."""
from motivic import L, kapranov_zeta, projective_class, verify_lemma, verify_scaling, verify_theorem1
from motivic.series import TruncatedSeries

print("zeta_L   =", kapranov_zeta(L, 5))
print("zeta_L^2 =", kapranov_zeta(L ** 2, 5))
print("zeta_P^1 =", kapranov_zeta(projective_class(1), 4))

# Symmetric powers of affine space are affine spaces.
for n in range(4):
    report = verify_theorem1(n, 12)
    print(report.summary())

# Multiplying the class by L rescales T.
print(verify_scaling(1 + L + L ** 2, 10).summary())

# The same rescaling commutes with any power, not just zeta functions.
a = TruncatedSeries([1, 1 + L, 2 * L ** 2, 1], 8)
print(verify_lemma(a, 2 * L ** -1 - L, 2).summary())
