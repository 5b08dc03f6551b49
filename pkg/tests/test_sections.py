from __future__ import annotations

import itertools

import pytest

from cisect import (
    SectionClass,
    SectionTuple,
    VarietyDescriptor,
    bertini_scan,
    count_points,
    hooley_condition_census,
    make_field,
    second_moment,
    section_count,
    section_smooth_check,
)
from cisect.errors import ArityMismatch, BadSingularDim, BudgetExceeded, FieldMismatch

from conftest import make_cone, make_cubic_surface, make_smooth_quadric, poly


def gamma_of(v, *rows):
    return SectionTuple.from_ints(v.field, rows)


def test_section_count_known_values():
    v = make_cone(5)
    # plane X3 = 0 misses the vertex: smooth conic, q+1 points
    assert section_count(v, gamma_of(v, (0, 0, 0, 1))) == 6
    # plane X0 = 0 forces X2 = 0: the line {X0 = X2 = 0}, q+1 points
    assert section_count(v, gamma_of(v, (1, 0, 0, 0))) == 6
    # the all-zero covector imposes nothing
    assert section_count(v, gamma_of(v, (0, 0, 0, 0))) == count_points(v)


def test_section_count_extension():
    v = make_cone(5)
    assert section_count(v, gamma_of(v, (0, 0, 0, 1)), ext=2) == 26  # conic over F_25


def test_section_tuple_validation():
    f5 = make_field(5)
    with pytest.raises(ArityMismatch):
        SectionTuple(())
    with pytest.raises(ArityMismatch):
        SectionTuple.from_ints(f5, [(1, 0), (1, 0, 0)])
    with pytest.raises(FieldMismatch):
        SectionTuple(
            (
                (f5.one, f5.zero),
                (make_field(7).one, make_field(7).zero),
            )
        )
    v = make_cone(5)
    with pytest.raises(ArityMismatch):
        section_count(v, gamma_of(v, (1, 0, 0)))  # wrong width
    with pytest.raises(FieldMismatch):
        section_count(v, SectionTuple.from_ints(make_field(7), [(1, 0, 0, 0)]))


def test_smooth_check_pass_and_fail():
    v = make_cone(13)
    good = section_smooth_check(v, gamma_of(v, (0, 0, 0, 1)))
    assert good.classification is SectionClass.PASS
    assert good.witness is None
    assert good.point_count == 14  # smooth conic over F_13

    bad = section_smooth_check(v, gamma_of(v, (1, 0, 0, 0)))
    assert bad.classification is SectionClass.RANK_FAIL
    assert str(bad.witness) == "(0:1:0:0)"
    assert bad.witness_ext == 1


def test_smooth_check_degenerate_pair():
    f3 = make_field(3)
    threefold = VarietyDescriptor.build(
        f3, 5,
        [poly(f3, 5, [(1, (1, 1, 0, 0, 0)), (-1, (0, 0, 1, 1, 0))])],
        dim=3, sing_dim=1,
    )
    dup = section_smooth_check(
        threefold, SectionTuple.from_ints(f3, [(1, 0, 0, 0, 0), (1, 0, 0, 0, 0)])
    )
    assert dup.classification is SectionClass.DEGENERATE
    # scalar multiples are just as dependent
    dup2 = section_smooth_check(
        threefold, SectionTuple.from_ints(f3, [(1, 0, 0, 0, 0), (2, 0, 0, 0, 0)])
    )
    assert dup2.classification is SectionClass.DEGENERATE
    # independent pair cutting through the cone vertex fails at the vertex
    cross = section_smooth_check(
        threefold, SectionTuple.from_ints(f3, [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0)])
    )
    assert cross.classification is SectionClass.RANK_FAIL
    assert str(cross.witness) == "(0:0:0:0:1)"


def test_smooth_check_arity_window():
    v = make_cone(5)  # r = 2 allows only s = 0
    with pytest.raises(BadSingularDim):
        section_smooth_check(v, gamma_of(v, (1, 0, 0, 0), (0, 1, 0, 0)))


def test_scan_cone_f2_exact():
    v = make_cone(2)
    rep = bertini_scan(v, mode="affine")
    assert (rep.total, rep.pass_count, rep.rank_fail_count, rep.degenerate_count) == (
        16, 8, 7, 1,
    )
    assert rep.pass_count + rep.not_pass_count == rep.total
    assert not rep.floor_applicable  # q = 2 <= section degree bound 6
    assert rep.pass_floor == 0

    proj = bertini_scan(v, mode="projective")
    assert (proj.total, proj.pass_count, proj.rank_fail_count, proj.degenerate_count) == (
        15, 8, 7, 0,
    )
    w = proj.witnesses[0]
    assert (w.index, w.gamma, w.point, w.ext) == (0, ((1, 0, 0, 0),), (0, 1, 0, 0), 1)


def test_scan_cone_f5_exact():
    # a hyperplane section of the cone is singular iff it passes through the
    # vertex, i.e. iff the X3 coefficient vanishes
    rep = bertini_scan(make_cone(5), mode="affine")
    assert rep.total == 625
    assert rep.pass_count == 500
    assert rep.rank_fail_count == 124
    assert rep.degenerate_count == 1


def test_scan_worker_invariance():
    v = make_smooth_quadric(3)
    solo = bertini_scan(v, workers=1)
    multi = bertini_scan(v, workers=3)
    assert solo == multi
    proj1 = bertini_scan(v, mode="projective", workers=1)
    proj4 = bertini_scan(v, mode="projective", workers=4)
    assert proj1 == proj4


def test_scan_extension_depth_changes_verdicts():
    # the cyclic cubic surface over F_3 has hyperplane sections whose singular
    # points are only rational over F_9
    v = make_cubic_surface(3)
    e1 = bertini_scan(v, max_ext=1)
    e2 = bertini_scan(v, max_ext=2)
    e3 = bertini_scan(v, max_ext=3)
    assert (e1.pass_count, e1.rank_fail_count, e1.degenerate_count) == (54, 26, 1)
    assert (e2.pass_count, e2.rank_fail_count, e2.degenerate_count) == (40, 40, 1)
    assert (e3.pass_count, e3.rank_fail_count) == (e2.pass_count, e2.rank_fail_count)
    first_deeper = next(w for w in e2.witnesses if w.ext == 2)
    assert first_deeper.index == 11
    assert first_deeper.gamma == ((0, 1, 0, 2),)


def test_scan_rejects_bad_arguments():
    v = make_cone(5)
    with pytest.raises(ValueError):
        bertini_scan(v, mode="sideways")
    with pytest.raises(ValueError):
        bertini_scan(v, workers=0)
    with pytest.raises(ValueError):
        bertini_scan(v, max_ext=0)
    smooth_curve = VarietyDescriptor.build(
        v.field, 3,
        [poly(v.field, 3, [(1, (1, 0, 1)), (-1, (0, 2, 0))])],
        dim=1, sing_dim=-1,
    )
    with pytest.raises(BadSingularDim):
        bertini_scan(smooth_curve)  # r = 1 leaves no room for s >= 0


def naive_tuple_stats(v, s):
    """Literal definition: walk every affine covector tuple, count section
    points, accumulate the squared deviation and the census."""
    q = v.field.q
    n_points = count_points(v)
    qs = q ** (s + 1)
    threshold = 2 * n_points * (qs - 1)
    moment = satisfying = 0
    for rows in itertools.product(
        itertools.product(range(q), repeat=v.nvars), repeat=s + 1
    ):
        n_gamma = section_count(v, SectionTuple.from_ints(v.field, rows))
        dev = n_points - qs * n_gamma
        moment += dev * dev
        if dev * dev <= threshold:
            satisfying += 1
    return moment, satisfying


@pytest.mark.parametrize("s", [0, 1])
def test_moment_matches_naive_sum(s):
    v = make_cone(2)
    naive_moment, naive_sat = naive_tuple_stats(v, s)
    res = second_moment(v, s)
    assert res.computed == naive_moment
    assert res.computed == res.closed_form
    census = hooley_condition_census(v, s)
    assert census.satisfying == naive_sat
    assert census.total == 2 ** (4 * (s + 1))


def test_moment_closed_form_shape():
    v = make_cone(3)
    res = second_moment(v, 0)
    n = count_points(v)
    assert n == 13
    assert res.closed_form == n * 3**4 * (3 - 1)
    assert res.computed == res.closed_form


def test_moment_rejects_negative_s_and_budget():
    v = make_cone(2)
    with pytest.raises(BadSingularDim):
        second_moment(v, -1)
    with pytest.raises(BudgetExceeded):
        second_moment(v, 6)  # 2^28 tuples
    with pytest.raises(BudgetExceeded):
        second_moment(make_cone(13), 1)  # 13^8 tuples
    with pytest.raises(BudgetExceeded):
        hooley_condition_census(make_cone(13), 1)


def test_census_half_mass_on_smooth_quadric():
    v = make_smooth_quadric(3)
    census = hooley_condition_census(v, 0)
    assert 2 * census.satisfying >= census.total
    assert census.half_mass
