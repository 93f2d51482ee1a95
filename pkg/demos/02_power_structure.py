"""Raising a series with constant term 1 to a motivic exponent.

Any such series factors uniquely as prod_i (1 - T^i)^(-b_i).  Raising it
to the power M multiplies every b_i by M.
"""
from motivic import L, ONE, euler_factorize, parse_series, power, power_finite

a = parse_series("1 + T", 6)
print("A =", a)
print("Euler exponents of A:", [str(b) for b in euler_factorize(a).exponents])

print("A^2 =", power(a, 2))
print("A^L =", power(a, L))
print("A^(L^-1 - 2) =", power(a.truncate(3), L ** -1 - 2))

# For an integer exponent m, the configuration-space count over m labelled
# points gives the same series.
coeffs = [2, -1, 3]
series = parse_series("1 + 2*T - T^2 + 3*T^3", 6)
for m in range(4):
    assert power_finite(coeffs, m, 6) == power(series, m)
    print(f"m={m}:", power_finite(coeffs, m, 6))

try:
    power(a, ONE / (L - 1))
except ValueError as exc:
    print("rejected:", exc)
