"""Point-count estimates: right-hand sides, applicability, verification.

Every estimate is kept as an exact integer-plus-radicals value, so verdicts
are enclosure comparisons, never floating point.  The cone over F_13 satisfies
the arithmetic condition q > 2(s+1) * section-degree-bound, so all five rows
apply; over F_5 the sharpest row is switched off but still reported.

Run as `python3 demos/06_estimates.py`.
"""
from __future__ import annotations

from pathlib import Path

from cisect import estimate_suite, load_variety, verify_variety
from cisect.radicals import display_30

HERE = Path(__file__).resolve().parent.parent

suite = estimate_suite(13, 3, 2, 0, (2,))
print("estimate right-hand sides for a quadric cone surface at q=13:")
for row in suite.rows:
    flag = "on " if row.applicable else "off"
    print(f"  [{flag}] {row.name:<18} {display_30(row.rhs):<40} {row.condition}")

print("\nagainst the actual count:")
for name in ("cone13", "cone5"):
    v = load_variety(HERE / "varieties" / f"{name}.var")
    rep = verify_variety(v)
    print(f"  {name}: N={rep.point_count}, p_r={rep.expected}, "
          f"deviation {rep.deviation}")
    for row in rep.rows:
        print(f"    {row.name:<18} lhs={row.lhs:<4} {row.verdict}")
