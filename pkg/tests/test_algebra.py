from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vertexkit.algebra import (
    A,
    B,
    NonExactDivision,
    Polynomial,
    RationalFunction,
    UnassignedVariable,
    Var,
    X,
    Y,
    a,
    b,
    col_swap_map,
    divide_exact,
    divides,
    parse_polynomial,
    product,
    swap_col_vars,
    swap_point,
    swap_row_vars,
    x,
    y,
)

VARS = [X(1), X(2), Y(1), Y(2), A(1), A(2), B(1), B(2)]

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=3).map(
    lambda d: tuple(sorted(d.items(), reverse=True)))
polys = st.dictionaries(monomials, coeffs, max_size=5).map(Polynomial)
points = st.fixed_dictionaries({v: st.fractions(min_value=-4, max_value=4, max_denominator=3) for v in VARS})


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial()
    assert p * 1 == p and p + 0 == p


@settings(max_examples=60, deadline=None)
@given(polys)
def test_text_round_trip(p):
    assert parse_polynomial(str(p)) == p


@settings(max_examples=40, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_divide_exact_recovers_factor(p, q):
    if q.is_zero():
        return
    assert divide_exact(p * q, q) == p


@settings(max_examples=40, deadline=None)
@given(polys, points)
def test_swap_commutes_with_evaluation(p, pt):
    assert swap_col_vars(p, 1).evaluate(pt) == p.evaluate(swap_point(pt, col_swap_map(1)))
    assert swap_row_vars(swap_row_vars(p, 1), 1) == p


def test_canonical_text():
    assert str(1 - a(1) * b(1)) == "1 - a1*b1"
    assert str(Polynomial()) == "0"
    assert str(x(2) - x(1)) == "-x1 + x2"
    assert str(Fraction(1, 2) * x(1) ** 2 - 3) == "-3 + 1/2*x1^2"


def test_parse_accepts_explicit_unit_coefficients():
    assert parse_polynomial("1 - 1/1*a1*b1") == 1 - a(1) * b(1)
    assert parse_polynomial("2*x1*x1") == 2 * x(1) ** 2


@pytest.mark.parametrize("bad", ["", "x0", "1 +", "x1 y1", "z3", "x1^"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_polynomial(bad)


def test_divide_exact_rejects_with_remainder():
    with pytest.raises(NonExactDivision) as err:
        divide_exact(x(1) ** 2 + 1, x(1) + 1)
    assert not err.value.remainder.is_zero()
    assert divides(x(1) + y(1), (x(1) + y(1)) * (1 - a(1) * b(2)))
    with pytest.raises(ZeroDivisionError):
        divide_exact(x(1), Polynomial())


def test_evaluate_missing_variable():
    with pytest.raises(UnassignedVariable):
        (x(1) + y(2)).evaluate({X(1): 1})


def test_subs_and_rename():
    p = x(1) * a(2) + y(1)
    assert p.subs({A(2): 3}) == 3 * x(1) + y(1)
    assert p.subs({X(1): y(1)}) == y(1) * a(2) + y(1)
    assert p.rename({X(1): X(2)}) == x(2) * a(2) + y(1)


def test_var_names():
    assert str(Var.parse("b12")) == "b12"
    with pytest.raises(ValueError):
        Var.parse("c1")


def test_rational_function():
    f = RationalFunction(x(1) ** 2 - y(1) ** 2, x(1) - y(1))
    assert f.reduce().as_polynomial() == x(1) + y(1)
    assert f == RationalFunction(x(1) + y(1))
    assert (f * RationalFunction(1, x(1) + y(1))) == RationalFunction(1)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, 0)


def test_product_of_nothing_is_one():
    assert product([]) == Polynomial.const(1)
