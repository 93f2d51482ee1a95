"""Coefficients of the stack series for BC*, built from [BGL(m)]."""
from motivic import L, bgl_class, stack_zeta_bcstar, verify_bcstar

coeffs = stack_zeta_bcstar(5)
for m, c in enumerate(coeffs):
    print(f"c_{m} = {c}")

# [BGL(m)] at L = q is 1/|GL(m, F_q)|.
for m in (1, 2, 3):
    print(f"[BGL({m})] at q=2:", bgl_class(m).evaluate(2))

print(verify_bcstar(8).summary())
