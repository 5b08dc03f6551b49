"""Hyperplane sections of the quadric cone: counts and smoothness verdicts.

A hyperplane through the cone vertex slices the cone in a pair of lines (or a
double line), which is singular; a hyperplane missing the vertex cuts a smooth
conic.  The verdicts below recover this picture covector by covector.

Run as `python3 demos/03_section_census.py`.
"""
from __future__ import annotations

from pathlib import Path

from cisect import SectionTuple, load_variety, section_count, section_smooth_check

HERE = Path(__file__).resolve().parent.parent

v = load_variety(HERE / "varieties" / "cone5.var")
print(f"cone over F_{v.field.q}: vertex at (0:0:0:1)\n")

samples = [
    (0, 0, 0, 1),  # misses the vertex: smooth conic
    (1, 0, 0, 0),  # contains the vertex: line pair through it
    (1, 4, 0, 0),  # contains the vertex, different slope
    (2, 3, 1, 4),  # generic
]
for gamma in samples:
    section = SectionTuple.from_ints(v.field, [gamma])
    n = section_count(v, section)
    verdict = section_smooth_check(v, section)
    where = f" at {verdict.witness}" if verdict.witness else ""
    print(f"  gamma={gamma}: {n} points, {verdict.classification.value}{where}")

# The zero covector imposes no condition at all; the check flags it instead
# of pretending the full cone is a section.
degenerate = section_smooth_check(v, SectionTuple.from_ints(v.field, [(0, 0, 0, 0)]))
print(f"  gamma=(0, 0, 0, 0): {degenerate.classification.value} "
      f"(covector rank too small)")
