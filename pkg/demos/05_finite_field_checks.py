"""Counting zero-cycles over finite fields three independent ways.

Setting L = q in the class of S^m X should count effective degree-m
zero-cycles on X over F_q.  The Weil zeta function, a census of closed
points, and (for tiny cases) direct enumeration of Frobenius orbits all
produce that count without any motivic input.
"""
from motivic import (
    brute_force_cycles,
    closed_points,
    counts_from_class,
    crosscheck_kapranov_weil,
    cycles_from_closed_points,
    weil_coefficients,
)
from motivic.oracle import space_class
from motivic.zeta import symmetric_power_class

for space, q, m in [("A^1", 2, 2), ("P^1", 2, 2), ("P^1", 2, 3), ("P^2", 3, 3)]:
    c = space_class(space)
    table = counts_from_class(c, q, m)
    print(
        f"S^{m} {space} over F_{q}: motivic {symmetric_power_class(c, m).evaluate(q)}, "
        f"Weil {weil_coefficients(table, m)}, "
        f"closed points {cycles_from_closed_points(closed_points(table), m)}, "
        f"orbits {brute_force_cycles(space, q, m)}"
    )

print("closed points of A^1 over F_2 by degree:", closed_points(counts_from_class(space_class("A^1"), 2, 6)))
print(crosscheck_kapranov_weil(space_class("Gr(2,4)"), 5, 5).summary())
