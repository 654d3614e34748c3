# Unit tests for the sparse and Laurent polynomial types

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.forest_hilbert.errors import ForbiddenSampleError
from src.forest_hilbert.polynomials import (
    ONE_XY,
    X,
    Y,
    LaurentPoly,
    SparsePoly,
    coefficient,
    eval_rational,
    geometric_block,
    univariate,
)

bivariate = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=6,
).map(lambda terms: SparsePoly(terms, 2))

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def test_str_descending_lex():
    """Test that terms print in descending lexicographic order."""
    assert str(X ** 2 + X + Y) == "x^2 + x + y"
    assert str(SparsePoly({(2, 1): 3, (0, 0): -2}, 2)) == "3*x^2*y - 2"
    assert str(SparsePoly({}, 2)) == "0"
    assert str(ONE_XY) == "1"
    assert str(-Y) == "-y"


def test_zero_coefficients_dropped():
    """Test that cancelling terms disappear from storage."""
    p = (X + Y) - Y
    assert p == X
    assert len(p) == 1
    assert not (X - X)


def test_negative_exponent_rejected():
    """Test that SparsePoly refuses negative exponents while LaurentPoly stores them."""
    with pytest.raises(ValueError):
        univariate({-1: 1})
    assert LaurentPoly.monomial(-2, 3).coefficient(-2) == 3


def test_laurent_promotion():
    """Test that mixing with a Laurent polynomial gives a Laurent polynomial."""
    p = univariate({1: 1}) * LaurentPoly.monomial(-3)
    assert isinstance(p, LaurentPoly)
    assert p.coefficient(-2) == 1


def test_laurent_pole_at_zero():
    """Test that evaluating a negative power at zero raises."""
    with pytest.raises(ForbiddenSampleError):
        LaurentPoly.monomial(-1).evaluate(0)


def test_power_and_coefficients():
    """Test exponentiation against binomial coefficients."""
    p = (univariate({0: 1, 1: 1})) ** 3
    assert [p.coefficient(k) for k in range(4)] == [1, 3, 3, 1]
    assert p.degree() == 3
    assert p.min_degree() == 0
    assert p.coefficient_sum() == 8


def test_evaluate_exact():
    """Test exact rational evaluation."""
    p = X ** 2 + X + Y
    assert p.evaluate(Fraction(1, 2), 3) == Fraction(15, 4)
    with pytest.raises(ValueError):
        p.evaluate(1)


def test_geometric_block():
    """Test both geometric blocks."""
    assert geometric_block(3) == univariate({0: 1, 1: 1, 2: 1})
    assert geometric_block(2, low=1) == univariate({1: 1, 2: 1})
    with pytest.raises(ValueError):
        geometric_block(2, low=2)


def test_json_form():
    """Test the exponent-plus-decimal-string JSON rows."""
    p = X ** 2 * 3 - 2
    assert p.to_json() == [[2, 0, "3"], [0, 0, "-2"]]
    assert SparsePoly.from_json(p.to_json(), 2) == p


def test_geometric_power_matches_sympy():
    """Test that powers of the geometric block agree with sympy's expansion."""
    y = sympy.symbols("y")
    expected = sympy.Poly(sympy.expand((1 + y + y ** 2) ** 4), y).as_dict()
    ours = geometric_block(3) ** 4
    assert {(k,): c for (k,), c in ours.terms.items()} == expected


def test_str_parses_in_sympy():
    """Test that the printed form denotes the same polynomial."""
    x, y = sympy.symbols("x y")
    p = (X - 1) ** 3 * (Y + 2) + X * Y ** 2
    parsed = sympy.sympify(str(p).replace("^", "**"))
    assert sympy.expand(parsed - ((x - 1) ** 3 * (y + 2) + x * y ** 2)) == 0


@settings(max_examples=50, deadline=None)
@given(bivariate, bivariate, bivariate)
def test_ring_axioms(a, b, c):
    """Test commutativity and distributivity on random polynomials."""
    assert a * b == b * a
    assert a + b == b + a
    assert (a + b) * c == a * c + b * c
    assert a - a == SparsePoly({}, 2)


@settings(max_examples=50, deadline=None)
@given(bivariate, bivariate, rationals, rationals)
def test_evaluation_is_multiplicative(a, b, x, y):
    """Test that evaluation respects products and sums."""
    assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
    assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)


def test_worked_examples():
    """Test small worked examples of the polynomial operations."""
    y = univariate({1: 1})
    assert (y + 1) * (y - 1) == univariate({2: 1, 0: -1})
    assert (y + y ** 2 + y ** 3) ** 2 == univariate({2: 1, 3: 2, 4: 3, 5: 2, 6: 1})
    assert y + 0 == y
    triangle = X ** 2 + X + Y
    assert eval_rational(triangle, 2, 1) == 7
    assert coefficient(geometric_block(3), 1) == 1
    assert coefficient(triangle, (0, 1)) == 1
    assert coefficient(triangle, (5, 5)) == 0
