from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cisect import (
    SparsePolynomial,
    VariableGrouping,
    check_homogeneous,
    check_multihomogeneous,
    count_affine_zeros,
    eval_poly,
    format_poly,
    lift_to,
    make_field,
    parse_poly,
    partial_derivative,
    random_multihomogeneous,
    random_polynomial,
)
from cisect.errors import (
    ArityMismatch,
    BudgetExceeded,
    CoefficientOutOfRange,
    ExponentArityMismatch,
    FieldMismatch,
    PolyParseError,
)
from cisect.mpoly import ANY_DEGREE, NOT_HOMOGENEOUS, NOT_MULTIHOMOGENEOUS

F5 = make_field(5)
F2 = make_field(2)
F4 = make_field(2, 2)


def test_parse_format_round_trip():
    text = "1:1,1,0,0 + 4:0,0,2,0"
    f = parse_poly(text, 4, F5)
    assert format_poly(f) == text
    assert parse_poly(format_poly(f), 4, F5) == f


def test_parse_canonicalizes_term_order():
    # parser accepts any order, formatter emits lex-descending exponents
    assert format_poly(parse_poly("4:0,0,2,0 + 1:1,1,0,0", 4, F5)) == "1:1,1,0,0 + 4:0,0,2,0"


def test_parse_combines_duplicate_terms():
    f = parse_poly("2:1,0 + 4:1,0", 2, F5)
    assert format_poly(f) == "1:1,0"
    assert format_poly(parse_poly("2:1,0 + 3:1,0", 2, F5)) == "0:0,0"


def test_zero_polynomial_format():
    assert format_poly(SparsePolynomial.zero(F5, 3)) == "0:0,0,0"
    assert format_poly(SparsePolynomial.zero(F4, 2)) == "0;0:0,0"


def test_extension_coefficient_grammar():
    text = "1;1:2,0 + 0;1:0,1"
    f = parse_poly(text, 2, F4)
    assert format_poly(f) == text
    g = F4.element((0, 1))
    # evaluate (g+1)X0^2 + g X1 at (1, 1)
    val = eval_poly(f, (F4.one, F4.one))
    assert val == F4.element((1, 1)) + g


def test_parse_errors_carry_byte_offsets():
    with pytest.raises(PolyParseError) as info:
        parse_poly("1:1,0 + :0,1", 2, F5)
    assert info.value.offset == 8
    with pytest.raises(CoefficientOutOfRange):
        parse_poly("5:1,0", 2, F5)
    with pytest.raises(ExponentArityMismatch):
        parse_poly("1:1", 2, F5)
    with pytest.raises(PolyParseError):
        parse_poly("1: 1,0", 2, F5)  # stray whitespace inside a term
    with pytest.raises(PolyParseError):
        parse_poly("", 2, F5)


def test_arithmetic_matches_pointwise():
    rng = random.Random(11)
    pts = [tuple(F5.from_index(rng.randrange(5)) for _ in range(3)) for _ in range(20)]
    for _ in range(25):
        f = random_polynomial(F5, 3, 3, rng)
        g = random_polynomial(F5, 3, 2, rng)
        fg = f * g
        fpg = f + g
        for x in pts:
            assert eval_poly(fg, x) == eval_poly(f, x) * eval_poly(g, x)
            assert eval_poly(fpg, x) == eval_poly(f, x) + eval_poly(g, x)
            assert eval_poly(f - g, x) == eval_poly(f, x) - eval_poly(g, x)


def test_scalar_multiplication():
    f = parse_poly("1:2,0 + 2:0,1", 2, F5)
    assert format_poly(F5.element(2) * f) == "2:2,0 + 4:0,1"
    assert (F5.zero * f).is_zero


def test_total_degree():
    assert parse_poly("1:2,3", 2, F5).total_degree() == 5
    assert SparsePolynomial.zero(F5, 2).total_degree() == -1
    assert parse_poly("3:0,0", 2, F5).total_degree() == 0


def test_partial_derivative_basics():
    f = parse_poly("1:3,0", 2, F5)  # X0^3
    assert format_poly(partial_derivative(f, 0)) == "3:2,0"
    assert partial_derivative(f, 1).is_zero
    with pytest.raises(IndexError):
        partial_derivative(f, 2)


def test_characteristic_kills_derivative():
    f3 = make_field(3)
    f = parse_poly("1:3,0", 2, f3)
    assert partial_derivative(f, 0).is_zero


def test_homogeneity_checks():
    assert check_homogeneous(parse_poly("1:1,1,0 + 4:0,0,2", 3, F5)) == 2
    assert check_homogeneous(parse_poly("1:1,0,0 + 1:1,1,0", 3, F5)) is NOT_HOMOGENEOUS
    assert check_homogeneous(SparsePolynomial.zero(F5, 3)) is ANY_DEGREE


def test_multihomogeneity_checks():
    grouping = VariableGrouping((2, 2))
    # Gamma_{1,0} * Gamma_{2,0}: multidegree (1, 1)
    f = parse_poly("1:1,0,1,0", 4, F2)
    assert check_multihomogeneous(f, grouping) == (1, 1)
    g = parse_poly("1:1,0,1,0 + 1:0,1,0,0", 4, F2)
    assert check_multihomogeneous(g, grouping) is NOT_MULTIHOMOGENEOUS
    assert check_multihomogeneous(SparsePolynomial.zero(F2, 4), grouping) is ANY_DEGREE
    with pytest.raises(ArityMismatch):
        check_multihomogeneous(f, VariableGrouping((2, 3)))


def test_count_affine_zeros_brute_cross_check():
    rng = random.Random(7)
    for _ in range(10):
        f = random_polynomial(F5, 3, 2, rng)
        naive = 0
        for a in range(5):
            for b in range(5):
                for c in range(5):
                    x = (F5.element(a), F5.element(b), F5.element(c))
                    if eval_poly(f, x).is_zero:
                        naive += 1
        assert count_affine_zeros(f) == naive


def test_count_affine_zeros_known_values():
    # X0 * X2 over F_2 in four variables: zero iff x0 = 0 or x2 = 0
    f = parse_poly("1:1,0,1,0", 4, F2)
    assert count_affine_zeros(f) == 12
    assert count_affine_zeros(SparsePolynomial.zero(F2, 3)) == 8


def test_count_affine_zeros_extension_field():
    # X0^2 + g X1 over F_4 exercises the non-numpy path
    f = parse_poly("1;0:2,0 + 0;1:0,1", 2, F4)
    naive = sum(
        1
        for a in range(4)
        for b in range(4)
        if eval_poly(f, (F4.from_index(a), F4.from_index(b))).is_zero
    )
    assert count_affine_zeros(f) == naive == 4


def test_count_affine_zeros_budget():
    f = parse_poly("1:" + ",".join(["1"] + ["0"] * 11), 12, make_field(7))
    with pytest.raises(BudgetExceeded):
        count_affine_zeros(f)


def test_lift_to_extension():
    f = parse_poly("1:2,0 + 1:0,1", 2, F2)
    lifted = lift_to(f, F4)
    assert lifted.field.q == 4
    for idx_a in range(4):
        for idx_b in range(4):
            x = (F4.from_index(idx_a), F4.from_index(idx_b))
            direct = x[0] * x[0] + x[1]
            assert eval_poly(lifted, x) == direct
    with pytest.raises(FieldMismatch):
        lift_to(parse_poly("1;0:1,0", 2, F4), make_field(2, 4))


def test_random_polynomial_determinism_and_shape():
    a = random_polynomial(F5, 3, 3, random.Random(42))
    b = random_polynomial(F5, 3, 3, random.Random(42))
    assert a == b
    h = random_polynomial(F5, 3, 3, random.Random(1), homogeneous=True)
    assert check_homogeneous(h) == 3
    m = random_multihomogeneous(F2, VariableGrouping((1, 1)), (1, 1), random.Random(3))
    assert check_multihomogeneous(m, VariableGrouping((1, 1))) == (1, 1)


@given(st.integers(0, 5**4 - 1), st.integers(0, 5**4 - 1))
@settings(max_examples=60, deadline=None)
def test_eval_is_ring_homomorphism(seed_a, seed_b):
    rng_a, rng_b = random.Random(seed_a), random.Random(seed_b)
    f = random_polynomial(F5, 2, 2, rng_a)
    g = random_polynomial(F5, 2, 2, rng_b)
    x = (F5.element(seed_a % 5), F5.element(seed_b % 5))
    assert eval_poly(f * g, x) == eval_poly(f, x) * eval_poly(g, x)
    assert eval_poly(f + g, x) == eval_poly(f, x) + eval_poly(g, x)
