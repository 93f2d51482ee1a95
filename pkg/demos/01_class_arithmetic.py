"""Exact arithmetic with motivic classes.

Classes are Laurent polynomials in L, or reduced fractions of them.
Every value prints in one canonical form, so equality is structural.
"""
from motivic import L, ONE, eval_at, is_effective, parse_class

torus = L - 1
print("[G_m] + [pt] =", torus + 1)

x = ONE / (L - 1) + ONE / (L + 1)
print("1/(L-1) + 1/(L+1) =", x)

# Fractions reduce fully, and L-powers move out of the denominator.
print("(L^4 - 1)/(L^2 - 1) =", parse_class("(L^4-1)/(L^2-1)"))
print("1/((L^2 - L)(L^2 - 1)) =", ONE / ((L ** 2 - L) * (L ** 2 - 1)))

# Specialising L -> q gives exact rationals, never floats.
p2 = parse_class("1 + L + L^2")
for q in (2, 3, 4):
    print(f"|P^2(F_{q})| =", eval_at(p2, q))
print("1/(L-1) at q=3 =", eval_at(ONE / (L - 1), 3))

for text in ("L^2 - L", "1 + L + 2*L^2 + L^3 + L^4", "1/(L-1)"):
    print(f"{text!r} effective? {is_effective(parse_class(text))}")
