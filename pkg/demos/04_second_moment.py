"""The exact second moment of section counts, and the half-mass census.

Summing (N - q^{s+1} N(gamma))^2 over every covector tuple gamma collapses to
N q^{(n+1)(s+1)} (q^{s+1} - 1) with no error term.  Chebyshev then forces at
least half of all tuples to have a section count within sqrt(2N(q^{s+1}-1))
of the average, which is the census printed below.

Run as `python3 demos/04_second_moment.py`.
"""
from __future__ import annotations

from pathlib import Path

from cisect import hooley_condition_census, load_variety, second_moment

HERE = Path(__file__).resolve().parent.parent

for name in ("cone2", "smooth_quadric3", "conic5"):
    v = load_variety(HERE / "varieties" / f"{name}.var")
    q = v.field.q
    print(f"{name} (q={q}, {v.nvars} coordinates):")
    for s in (0, 1):
        if q ** (v.nvars * (s + 1)) > 1 << 22:
            print(f"  s={s}: tuple space too large for a demo, skipping")
            continue
        res = second_moment(v, s)
        census = hooley_condition_census(v, s)
        marker = "EQUAL" if res.equal else "MISMATCH"
        print(f"  s={s}: moment {res.computed} vs closed form {res.closed_form} "
              f"[{marker}]; census {census.satisfying}/{census.total} "
              f"{'>= half' if census.half_mass else '< half'}")
    print()
