from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

import configs as cf
import suites
from euclid.cfield import DEFAULT_DEPTH_LIMIT, CReal, as_creal, depth_limit, sign, sqrt
from euclid.errors import DepthLimitExceeded, DivisionByZero, NegativeRadicand

rngs = cf.rngs()
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def test_arith_examples():
    assert as_creal(Fraction(1, 3)) + Fraction(1, 6) == Fraction(1, 2)
    assert sqrt(2) * sqrt(2) == 2
    with mpmath.workdps(50):
        assert abs(mpmath.sqrt(2) + mpmath.sqrt(3) - mpmath.sqrt(5 + 2 * mpmath.sqrt(6))) < mpmath.mpf(10) ** -45
    assert (sqrt(2) + sqrt(3) - sqrt(5 + 2 * sqrt(6))).sign() == 0


def test_sqrt_examples():
    assert sqrt(4) == 2 and sqrt(4).is_rational()
    r = sqrt(2)
    assert (r * r - 2).sign() == 0
    # y-coordinate of the two-circle example: x^2 + y^2 = 4 with x = 3/2
    y = sqrt(7) / 2
    assert y * y + Fraction(9, 4) == 4


def test_sign_examples():
    assert 99**2 > 2 * 70**2  # squaring oracle
    assert sign(sqrt(2) - Fraction(99, 70)) == -1
    assert sign(0) == 0
    s = sqrt(2) + sqrt(3)
    assert sign(s * s - (5 + 2 * sqrt(6))) == 0


def test_errors():
    with pytest.raises(DivisionByZero):
        as_creal(1) / (sqrt(2) * sqrt(2) - 2)
    with pytest.raises(NegativeRadicand):
        sqrt(sqrt(2) - 2)
    with pytest.raises(TypeError):
        as_creal(1.5)


def test_depth_limit_is_enforced_and_configurable():
    x = as_creal(2)
    with depth_limit(3):
        for _ in range(3):
            x = sqrt(x + 1)
        with pytest.raises(DepthLimitExceeded):
            sqrt(x + 1)
    assert x.depth == 3
    assert DEFAULT_DEPTH_LIMIT == 16
    y = sqrt(x + 1)  # back under the default limit
    assert y.depth == 4


def test_arith_never_deepens():
    a, b = sqrt(sqrt(2) + 1), sqrt(3)
    for v in (a + b, a - b, a * b, a / b):
        assert v.depth == max(a.depth, b.depth)


def test_sqrt_of_a_square_folds_back():
    a = sqrt(2) + 1
    assert sqrt(a * a).depth == 1


def test_expression_rendering():
    assert (Fraction(1, 2) + sqrt(3) / 2).expr() == "(1/2 + sqrt(3)/2)"
    assert as_creal(Fraction(-3, 4)).expr() == "-3/4"
    assert sqrt(8).expr() == "2*sqrt(2)"


def test_decimal_rendering_rounds_to_nearest():
    assert sqrt(2).to_decimal(6) == "1.414214"
    assert (-sqrt(3)).to_decimal(3) == "-1.732"
    assert as_creal(Fraction(1, 8)).to_decimal(2) == "0.13"
    assert as_creal(0).to_decimal(2) == "0.00"


@given(rationals, rationals)
def test_rational_arithmetic_matches_fractions(a, b):
    x, y = as_creal(a), as_creal(b)
    assert x + y == a + b and x - y == a - b and x * y == a * b
    if b:
        assert x / y == a / b
    assert sign(x - y) == (a > b) - (a < b)


@given(st.fractions(min_value=0, max_denominator=30).filter(lambda q: q < 500))
def test_rational_sqrt_squares_back(q):
    r = sqrt(q)
    assert r * r == q and r.sign() >= 0


@pytest.mark.parametrize("name", sorted(suites.FIELD))
@given(rng=rngs)
def test_field_invariants(name, rng):
    suites.FIELD[name](rng)


def test_sign_agrees_with_numeric_evaluation_on_1000_values():
    suites.run(suites.FIELD["sign_matches_numeric"], 1000, "numeric")


def test_values_are_immutable_and_shareable():
    a = sqrt(5)
    b = a + 1
    assert a.normal_form is a.normal_form
    assert isinstance(b, CReal) and b != a
    with pytest.raises(AttributeError):
        a.extra = 1  # type: ignore[attr-defined]
