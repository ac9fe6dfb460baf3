from fractions import Fraction

import numpy as np
import pytest

from padiv.algebra import TdParams, TpParams, build_tp
from padiv.errors import InputError
from padiv.exact import QuadSurd
from padiv.serialize import format_float, parse_algebra, to_jsonable


def test_rational_spellings():
    inp = parse_algebra({"kind": "td", "params": {"g": " -3 / 4 ", "h": "0.25"}})
    assert inp.params == TdParams(Fraction(-3, 4), Fraction(1, 4))
    assert parse_algebra({"kind": "td", "params": {"g": "1e-1", "h": "2"}}).params == TdParams(Fraction(1, 10), 2)


def test_table_input_reads_as_tp():
    tp = TpParams(-1, 0, 0, -1, 0, 1, -2, 2)
    c = [[[str(v) for v in row] for row in mat] for mat in build_tp(tp).c]
    inp = parse_algebra({"kind": "table", "dim": 4, "c": c, "unit_index": 0})
    assert inp.tp == tp


def test_bad_unit_index():
    c = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    with pytest.raises(InputError) as err:
        parse_algebra({"kind": "table", "dim": 2, "c": c, "unit_index": 1})
    assert err.value.pointer == "/unit_index"


def test_to_jsonable():
    assert to_jsonable(Fraction(-1, 2)) == "-1/2"
    assert to_jsonable(QuadSurd(Fraction(1, 2), Fraction(1, 2), 5)) == str(QuadSurd(Fraction(1, 2), Fraction(1, 2), 5))
    assert to_jsonable(np.array([Fraction(1), 2.5], dtype=object)) == ["1", 2.5]
    assert format_float(0.1) == "0.10000000000000001"
