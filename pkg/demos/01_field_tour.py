"""Tour of exact finite field arithmetic: prime fields, extensions, indexing.

Run as `python3 demos/01_field_tour.py`.
"""
from __future__ import annotations

from cisect import make_field

f5 = make_field(5)
a, b = f5.element(3), f5.element(4)
print("F_5:", a, "+", b, "=", a + b, " and ", a, "*", b, "=", a * b)
inv = a.inverse()
print("inverse of 3 is", inv, "so 3 *", inv, "=", a * inv)

# Extensions pick a canonical irreducible modulus automatically.
f9 = make_field(3, 2)
print("\nF_9 modulus coefficients (constant term first):", f9.modulus)
g = f9.from_index(3)  # the generator residue class x
print("x =", g, " x^2 =", g * g, " (reduced by the modulus)")

# Every element has a stable integer index; enumeration follows it.
print("\nall of F_4, in index order:")
f4 = make_field(2, 2)
for i in range(f4.q):
    e = f4.from_index(i)
    print(f"  index {i}: coeffs {e.coeffs}")

# The multiplicative group has order q - 1 (Fermat / Lagrange).
f49 = make_field(7, 2)
e = f49.from_index(17)
print("\nin F_49, e^48 =", (e ** 48), "for e =", e)
