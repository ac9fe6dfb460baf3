from fractions import Fraction

import numpy as np
import pytest

from helpers import EXAMPLE2, TD_DIVISION, example1_table, rand_td_division
from padiv.algebra import (TdParams, associator, build_td, build_tp, element, is_zero, multiply,
                           table_from_products)
from padiv.exact import sqrt_rational
from padiv.errors import NucleusViolation
from padiv.pa import check_complex_structure, check_pa, general_pa_table_check
from padiv.units import UnitKind, UnitSet, unit_set_td, unit_set_tp, units_bruteforce


@pytest.mark.parametrize("params", TD_DIVISION)
def test_td_partially_alternative(params):
    rep = check_pa(build_td(params), unit_set_td(params))
    assert rep.flags() == (True, True, True) and rep.counterexample is None


def test_sampled_units_agree_with_symbolic_check():
    rng = np.random.default_rng(3)
    for _ in range(5):
        params = rand_td_division(rng, nonzero_h=True)
        t = build_td(params)
        fam = unit_set_td(params).families[0]
        # 25 Pythagorean points on the circle of units
        ts = [Fraction(n, d) for n, d in zip(range(-12, 13), [1, 2, 3, 5, 7] * 5)]
        pts = fam.rational_points(ts)
        assert len(pts) == 25
        for u in pts:
            for k in range(4):
                y = t.basis(k)
                for a in (associator(t, u, u, y), associator(t, u, y, u), associator(t, y, u, u)):
                    assert is_zero(a)


@pytest.mark.parametrize("g", [-4, -9, Fraction(-1, 4)])
def test_h_zero_requires_g_minus_one(g):
    params = TdParams(g, 0)
    t = build_td(params)
    rep = check_pa(t, unit_set_td(params))
    assert not rep.partially_alternative
    assert rep.counterexample is not None and not is_zero(rep.counterexample.associator)
    k = element(0, 0, 0, 1) / sqrt_rational(-Fraction(g))
    assert np.array_equal(multiply(t, k, k), -t.unit())
    assert any(not is_zero(associator(t, k, k, t.basis(j))) for j in range(4))


def test_quaternions_pass():
    assert check_pa(build_td(TdParams(-1, 0)), unit_set_td(TdParams(-1, 0))).partially_alternative


def test_example1_partially_flexible_only():
    t = example1_table()
    units = units_bruteforce(t, height=6).units
    rep = check_pa(t, UnitSet(UnitKind.FiniteOther, 3, points=tuple(units)))
    assert rep.flags() == (False, True, False)


def test_example2_partially_alternative():
    assert check_pa(build_tp(EXAMPLE2), unit_set_tp(EXAMPLE2)).partially_alternative


def test_complex_structures():
    for params in TD_DIVISION:
        t = build_td(params)
        assert check_complex_structure(t, t.basis(1)) == (True, True, True)
    t = example1_table()
    L2, comm, R2 = check_complex_structure(t, t.basis(1))
    assert not L2 and not R2


def test_general_table():
    for params in TD_DIVISION:
        t = build_td(params)
        assert general_pa_table_check(t, t.basis(1))
    bicomplex = table_from_products(4, {(1, 1): [-1, 0, 0, 0], (1, 2): [0, 0, 0, 1], (2, 1): [0, 0, 0, 1],
                                        (1, 3): [0, 0, -1, 0], (3, 1): [0, 0, -1, 0], (2, 2): [-1, 0, 0, 0],
                                        (2, 3): [0, -1, 0, 0], (3, 2): [0, -1, 0, 0], (3, 3): [1, 0, 0, 0]})
    with pytest.raises(NucleusViolation):
        general_pa_table_check(bicomplex, bicomplex.basis(1))
