from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from padiv.mpoly import CIRCLE, SPHERE, ConstrainedPoly, Relation

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def test_relation_reduces_to_zero():
    x, y = ConstrainedPoly.variables(CIRCLE)
    assert (x * x + y * y - 1).is_zero()
    a, b, c = ConstrainedPoly.variables(SPHERE)
    assert (a * a + b * b + c * c - 1).is_zero()
    assert not (a * a - 1).is_zero()


def test_weighted_relation():
    rel = Relation((Fraction(1), Fraction(3)))
    x, y = ConstrainedPoly.variables(rel)
    assert (x * x + 3 * y * y - 1).is_zero()
    assert (y * y).degree() == 2 and (y * y * y).degree() <= 3


@settings(max_examples=50)
@given(st.lists(small, min_size=6, max_size=6), small)
def test_normal_form_agrees_on_circle_points(cs, t):
    # rational point on the unit circle
    px, py = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    x, y = ConstrainedPoly.variables(CIRCLE)
    terms = [x, y, x * y, y * y, y * y * y, x * x * y]
    p = sum((c * m for c, m in zip(cs, terms)), ConstrainedPoly.constant(0, 2, CIRCLE))
    # sympy oracle: the unreduced polynomial at the same point
    X, Y = sympy.symbols("X Y")
    raw = [X, Y, X * Y, Y**2, Y**3, X**2 * Y]
    want = sum(sympy.Rational(c.numerator, c.denominator) * m for c, m in zip(cs, raw))
    got = p.evaluate((px, py))
    assert sympy.Rational(got.numerator, got.denominator) == want.subs(
        {X: sympy.Rational(px.numerator, px.denominator), Y: sympy.Rational(py.numerator, py.denominator)})


def test_free_polynomials_do_not_reduce():
    x = ConstrainedPoly.variable(0, 2)
    y = ConstrainedPoly.variable(1, 2)
    assert not (x * x + y * y - 1).is_zero()
