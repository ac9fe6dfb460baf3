from fractions import Fraction

import numpy as np
import pytest
import sympy

from helpers import EXAMPLE2, EXAMPLE3, EXAMPLE4, SUFFICIENT2, rand_tp
from padiv.algebra import TdParams, TpParams, build_tp
from padiv.exact import to_float
from padiv.forms import (CriterionPath, Definiteness, QuadForm2, Sufficiency, definiteness,
                         det_Lx_closed_form, division_td, division_tp, division_tp_sufficient,
                         forms_pq, forms_rs, witness_det)
from padiv.oracles import numeric_det_minimum

F = Fraction


def form(xx, xy, yy):
    return QuadForm2.from_coeffs(F(xx), F(xy), F(yy))


@pytest.mark.parametrize("params, p, q", [
    (EXAMPLE2, form(2, 0, 1), form(1, 0, F(1, 4))),
    (EXAMPLE3, form(3, 0, 2), form(2, -2, 1)),
    (EXAMPLE4, form(6, 1, 4), form(15, -13, 4)),
])
def test_worked_pq(params, p, q):
    assert forms_pq(params) == (p, q)


@pytest.mark.parametrize("params, s", [
    (EXAMPLE2, form(1, -1, F(1, 2))),
    (EXAMPLE3, form(2, 0, 2)),
    (EXAMPLE4, form(2, -2, 3)),
])
def test_worked_s(params, s):
    assert forms_rs(params)[1] == s


def test_zero_params():
    r, s = forms_rs(TpParams(*[0] * 8))
    assert r.is_zero() and s.is_zero()


def _sym_det(params):
    """det(L_x) as a sympy polynomial, built straight from the table entries."""
    t = build_tp(params)
    xs = sympy.symbols("x0:4")
    c = [[[sympy.Rational(v.numerator, v.denominator) for v in row] for row in mat] for mat in t.c]
    L = sympy.Matrix(4, 4, lambda k, j: sum(xs[i] * c[i][j][k] for i in range(4)))
    return sympy.expand(L.det()), xs


@pytest.mark.parametrize("seed", range(12))
def test_closed_form_det_matches_symbolic(seed):
    params = rand_tp(np.random.default_rng(seed))
    want, xs = _sym_det(params)
    a, b, g, d = xs
    p, q = forms_pq(params)
    pg, qg = (sum(sympy.Rational(c.numerator, c.denominator) * m
                  for c, m in zip(f.coeffs, (g**2, g * d, d**2))) for f in (p, q))
    u = a**2 + b**2
    assert sympy.expand(u**2 + pg * u + qg * (g**2 + d**2) - want) == 0
    x = [F(1, 2), F(-2), F(3), F(1, 3)]
    assert det_Lx_closed_form(params, x) == want.subs(dict(zip(xs, [sympy.Rational(v.numerator, v.denominator) for v in x])))


@pytest.mark.parametrize("coeffs", [(1, 0, 1), (1, 0, -1), (1, 0, 0), (-1, 2, -1), (0, 0, 0),
                                    (-2, 1, -3), (0, 1, 0), (3, -13, 4), (0, 0, -1)])
def test_definiteness_against_eigenvalues(coeffs):
    f = form(*coeffs)
    ev = np.linalg.eigvalsh(np.array(f.matrix(), dtype=float))
    d = definiteness(f)
    if np.all(ev == 0):
        assert d == Definiteness.Zero
    elif np.all(ev > 0):
        assert d == Definiteness.PositiveDefinite
    elif np.all(ev < 0):
        assert d == Definiteness.NegativeDefinite
    elif np.all(ev >= 0):
        assert d == Definiteness.PositiveSemi
    elif np.all(ev <= 0):
        assert d == Definiteness.NegativeSemi
    else:
        assert d == Definiteness.Indefinite


def test_example2_division():
    v = division_tp(EXAMPLE2)
    assert v.is_division and v.criterion_path == CriterionPath.Holds
    assert division_tp_sufficient(EXAMPLE2) == Sufficiency.Sufficient1


def test_sufficient2_fixture():
    p, q = forms_pq(SUFFICIENT2)
    assert p == form(-1, 0, 0) and q == form(7, 0, 8)
    assert division_tp(SUFFICIENT2).is_division
    assert division_tp_sufficient(SUFFICIENT2) == Sufficiency.Sufficient2
    assert numeric_det_minimum(SUFFICIENT2) > 1e-3


@pytest.mark.parametrize("seed", range(40))
def test_witness_kills_determinant(seed):
    params = rand_tp(np.random.default_rng(100 + seed))
    v = division_tp(params)
    if v.is_division:
        assert division_tp_sufficient(params) in tuple(Sufficiency)
        return
    assert v.witness is not None and any(x != 0 for x in v.witness)
    d = witness_det(params, v)
    if v.witness_exact:
        assert d == 0
    else:
        scale = max(1.0, float(np.max(np.abs(np.array([to_float(x) for x in v.witness])))) ** 4)
        assert abs(to_float(d)) < 1e-9 * scale


def test_sufficient_conditions_imply_division():
    # draws conditioned on q > 0, where both outcomes are common
    rng = np.random.default_rng(500)
    seen = {True: 0, False: 0}
    hits = 0
    while hits < 60:
        params = rand_tp(rng)
        if definiteness(forms_pq(params)[1]) != Definiteness.PositiveDefinite:
            continue
        hits += 1
        div = division_tp(params).is_division
        seen[div] += 1
        if division_tp_sufficient(params) != Sufficiency.Inconclusive:
            assert div
    assert seen[True] and seen[False]


@pytest.mark.parametrize("g, h", [(-2, 2), (-1, 0), (0, 0), (-1, 2), (-3, 3), (F(-1, 4), 1), (F(-9, 4), 3)])
def test_td_boundary_and_witness(g, h):
    p = TdParams(g, h)
    v = division_td(p)
    assert v.is_division == (F(g) + F(h) ** 2 / 4 < 0)
    assert division_tp(p.as_tp()).is_division == v.is_division
    if not v.is_division:
        assert v.witness_exact and witness_det(p.as_tp(), v) == 0


def test_td_irrational_witness():
    v = division_td(TdParams(1, 1))  # gamma = (1 + sqrt(5))/2
    assert v.witness_exact
    assert witness_det(TdParams(1, 1).as_tp(), v) == 0
