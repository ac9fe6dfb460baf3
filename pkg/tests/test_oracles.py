import numpy as np

from helpers import EXAMPLE2, SUFFICIENT2, rand_tp
from padiv.algebra import TdParams
from padiv.forms import Definiteness, definiteness, division_tp, forms_pq
from padiv.oracles import ZERO_TOL, numeric_det_minimum, numeric_is_division


def test_known_cases():
    assert numeric_is_division(EXAMPLE2)
    assert numeric_is_division(SUFFICIENT2)
    assert not numeric_is_division(TdParams(0, 0).as_tp())
    assert numeric_det_minimum(TdParams(-1, 2).as_tp()) < ZERO_TOL


def test_agreement_where_q_is_positive():
    # the regime where the Sturm scan does the deciding
    rng = np.random.default_rng(21)
    seen = {True: 0, False: 0}
    while sum(seen.values()) < 80:
        params = rand_tp(rng)
        if definiteness(forms_pq(params)[1]) != Definiteness.PositiveDefinite:
            continue
        exact = division_tp(params).is_division
        seen[exact] += 1
        assert exact == numeric_is_division(params), params
    assert min(seen.values()) > 5
