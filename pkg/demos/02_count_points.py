"""Exact rational point counts over a tower of extensions.

The quadric cone {X0 X1 = X2^2} in P^3 has 1 + (q+1)q points over F_q: the
vertex plus q+1 lines through it.  Counting over F_{q^e} for e = 1..3 checks
the closed form at every level.

Run as `python3 demos/02_count_points.py`.
"""
from __future__ import annotations

from pathlib import Path

from cisect import count_points, load_variety

HERE = Path(__file__).resolve().parent.parent

v = load_variety(HERE / "varieties" / "cone2.var")
q = v.field.q
print(f"quadric cone over F_{q}: dim {v.asserted_dim}, "
      f"multidegree {v.multidegree}, asserted singular dim {v.asserted_sing_dim}")

for e in (1, 2, 3, 4):
    qe = q**e
    n = count_points(v, ext=e)
    closed = 1 + (qe + 1) * qe
    marker = "==" if n == closed else "!="
    print(f"  N(F_{q}^{e}) = {n:>6}  {marker} 1 + (q^e+1)q^e = {closed}")

# The same numbers drive the `count` subcommand:
#   cisect count varieties/cone2.var --ext 2
