"""Full classification of one algebra, as a JSON-ready dict.

Fields that do not apply carry the string "n/a"; refusals carry a marker
naming the reason ("TooFewUnits", "NotPartiallyAlternative", ...).
"""

from __future__ import annotations

import time

import numpy as np

from . import linalg
from .algebra import TdParams, TpParams, build_td, build_tp
from .classify import (CanonicalForm, Exactness, automorphism_group, canonicalize, isomorphic,
                       is_homomorphism, lie_classify)
from .errors import (NotDivision, NotPartiallyAlternative, OutOfScope, ResidualTooLarge,
                     TooFewUnits)
from .forms import division_td, division_tp, division_tp_sufficient, forms_pq, forms_rs
from .pa import check_pa
from .serialize import AlgebraInput, describe, to_jsonable
from .units import UnitKind, UnitSet, unit_set_td, unit_set_tp, units_bruteforce

NA = "n/a"


def _units_json(us: UnitSet) -> dict:
    return {
        "kind": us.kind.value,
        "points": to_jsonable(list(us.points)),
        "families": [{"basis": to_jsonable(list(f.basis)), "weights": to_jsonable(list(f.weights))}
                     for f in us.families],
    }


def _pa_json(rep) -> dict:
    out = {"left_alt": rep.left_alt, "flexible": rep.flexible, "right_alt": rep.right_alt}
    if rep.counterexample is not None:
        cx = rep.counterexample
        out["counterexample"] = {"unit": to_jsonable(cx.unit), "y": to_jsonable(cx.y),
                                 "identity": cx.identity, "associator": to_jsonable(cx.associator)}
    return out


def canonical_of(inp: AlgebraInput) -> CanonicalForm:
    """Canonical form of a T_d, T_p or T_p-shaped table input (raises on refusal)."""
    if isinstance(inp.params, TdParams):
        p = inp.params
        if not division_td(p).is_division:
            raise NotDivision("not a division algebra")
        if p.h == 0 and p.g != -1:
            raise NotPartiallyAlternative("T_d(g, 0) needs g = -1")
        return CanonicalForm(p, linalg.identity(4), Exactness.Exact, 0.0)
    tp = inp.tp
    if tp is None:
        raise NotPartiallyAlternative("table is not in T_p shape")
    return canonicalize(tp)


def _canonical_json(cf: CanonicalForm) -> dict:
    g, h = cf.normalized
    return {
        "g": to_jsonable(g),
        "h": to_jsonable(h),
        "h_signed": to_jsonable(cf.params.h),
        "exactness": cf.exactness.value,
        "residual": cf.residual,
        "basis_change": to_jsonable(cf.basis_change),
    }


def verify(inp: AlgebraInput, oracle: bool = False, timing: bool = False) -> tuple[dict, bool]:
    """Report for one algebra; the flag is False when an oracle cross-check disagreed."""
    clock: dict = {}
    agree = True
    t0 = time.perf_counter()

    def lap(name):
        nonlocal t0
        now = time.perf_counter()
        clock[name] = now - t0
        t0 = now

    report: dict = {"input": describe(inp)}
    tp = inp.tp
    if tp is None:
        report.update(_generic_table(inp.table))
        if oracle:
            report["oracle"] = {"note": "no closed-form classifiers apply"}
        return report, True

    p, q = forms_pq(tp)
    r, s = forms_rs(tp)
    report["forms"] = {"p": str(p), "q": str(q), "r": str(r), "s": str(s)}
    if isinstance(inp.params, TdParams):
        verdict = division_td(inp.params)
    else:
        verdict = division_tp(tp)
    report["division"] = {
        "is_division": verdict.is_division,
        "criterion_path": verdict.criterion_path.value,
        "witness": to_jsonable(verdict.witness) if verdict.witness is not None else None,
        "witness_exact": verdict.witness_exact,
        "sufficient": division_tp_sufficient(tp).value,
    }
    lap("division")
    if oracle:
        from .oracles import numeric_det_minimum
        m = numeric_det_minimum(tp)
        ok = (m < 1e-9) != verdict.is_division
        report["oracle"] = {"numeric_det_min": m, "division_agrees": ok}
        agree &= ok

    if not verdict.is_division:
        for key in ("units", "pa", "canonical", "automorphisms", "lie"):
            report[key] = NA
        if timing:
            report["timing"] = clock
        return report, agree

    table = build_td(inp.params) if isinstance(inp.params, TdParams) else build_tp(tp)
    units = unit_set_td(inp.params) if isinstance(inp.params, TdParams) else unit_set_tp(tp)
    report["units"] = _units_json(units)
    lap("units")
    report["pa"] = _pa_json(check_pa(table, units))
    lap("pa")
    if oracle:
        bf = units_bruteforce(table, height=6)
        ok = all(units.contains(u) for u in bf.units)
        if units.kind == UnitKind.TwoPoints:
            ok &= len(bf.units) == 2
        report["oracle"]["bruteforce_units"] = len(bf.units)
        report["oracle"]["units_agree"] = ok
        agree &= ok

    try:
        cf = canonical_of(inp)
    except (TooFewUnits, NotPartiallyAlternative, ResidualTooLarge) as e:
        report["canonical"] = type(e).__name__
        report["automorphisms"] = NA
    else:
        report["canonical"] = _canonical_json(cf)
        aut = automorphism_group(cf.params)
        report["automorphisms"] = {
            "group": aut.group.value,
            "generator": to_jsonable(aut.nontrivial_generator) if aut.nontrivial_generator is not None else None,
        }
    lap("canonical")
    lie = lie_classify(tp)
    report["lie"] = {
        "type": lie.type.value,
        "alpha": to_jsonable(lie.alpha),
        "beta": to_jsonable(lie.beta),
        "fingerprint": {"derived_dim": lie.invariant_fingerprint[0],
                        "center_dim": lie.invariant_fingerprint[1],
                        "killing_signature": list(lie.invariant_fingerprint[2])},
        "fingerprint_matches_label": lie.consistent,
    }
    lap("lie")
    if timing:
        report["timing"] = clock
    return report, agree


def _generic_table(t) -> dict:
    """What can be said about a table outside T_p shape: brute-force units and PA on them."""
    out: dict = {"division": NA, "canonical": NA, "automorphisms": NA, "lie": NA}
    if t.unit_index is None or t.dim > 4:
        out["units"] = NA
        out["pa"] = NA
        return out
    bf = units_bruteforce(t)
    us = UnitSet(UnitKind.FiniteOther, t.dim, points=tuple(bf.units))
    out["units"] = {"kind": "FiniteOther", "points": to_jsonable(bf.units), "search_height": bf.height}
    out["pa"] = _pa_json(check_pa(t, us)) if bf.units else NA
    return out


def compare(a: AlgebraInput, b: AlgebraInput) -> dict:
    """Isomorphism verdict between two algebras with at least three imaginary units.

    Raises OutOfScope when either algebra has only the units +-i.
    """
    forms = []
    for inp in (a, b):
        try:
            forms.append(canonical_of(inp))
        except TooFewUnits as e:
            raise OutOfScope("isomorphism of algebras with exactly two imaginary units") from e
    ca, cb = forms
    verdict = isomorphic(ca.params, cb.params)
    out: dict = {"isomorphic": verdict.isomorphic,
                 "canonical": [_canonical_json(ca), _canonical_json(cb)]}
    if verdict:
        # old basis of a -> canonical a -> canonical b -> old basis of b
        Ba, Bb, M = ca.basis_change, cb.basis_change, verdict.witness
        exact = ca.exactness == Exactness.Exact and cb.exactness == Exactness.Exact
        if exact:
            W = Bb.dot(M).dot(linalg.inverse(Ba))
        else:
            W = Bb.astype(float) @ M.astype(float) @ np.linalg.inv(Ba.astype(float))
        out["witness"] = to_jsonable(W)
        out["witness_exact"] = exact
        out["witness_verified"] = is_homomorphism(W, a.table, b.table)
    return out


def canonical_report(inp: AlgebraInput) -> dict:
    try:
        return {"input": describe(inp), "canonical": _canonical_json(canonical_of(inp))}
    except (TooFewUnits, NotPartiallyAlternative, ResidualTooLarge, NotDivision) as e:
        return {"input": describe(inp), "canonical": type(e).__name__, "message": str(e)}


# one row of a parameter sweep

CSV_COLUMNS = [
    "index", "kind", "a", "b", "c", "d", "e", "f", "g", "h",
    "division", "criterion", "units", "left_alt", "flexible", "right_alt",
    "canonical_g", "canonical_h", "exactness", "aut", "lie", "alpha", "beta",
]


def scan_row(index: int, params) -> dict:
    """Classification of one sweep point; ``params`` is TdParams or TpParams."""
    tp = params.as_tp() if isinstance(params, TdParams) else params
    row = {k: NA for k in CSV_COLUMNS}
    row["index"] = index
    row["kind"] = "td" if isinstance(params, TdParams) else "tp"
    for name, v in tp.as_dict().items():
        row[name] = v
    verdict = division_td(params) if isinstance(params, TdParams) else division_tp(params)
    row["division"] = verdict.is_division
    row["criterion"] = verdict.criterion_path.value
    if not verdict.is_division:
        return row
    table = build_tp(tp)
    units = unit_set_tp(tp) if isinstance(params, TpParams) else unit_set_td(params)
    row["units"] = units.kind.value
    pa = check_pa(table, units)
    row["left_alt"], row["flexible"], row["right_alt"] = pa.flags()
    inp = AlgebraInput(row["kind"], params, table)
    try:
        cf = canonical_of(inp)
    except (TooFewUnits, NotPartiallyAlternative, ResidualTooLarge) as e:
        row["canonical_g"] = row["canonical_h"] = type(e).__name__
    else:
        row["canonical_g"], row["canonical_h"] = cf.normalized
        row["exactness"] = cf.exactness.value
        row["aut"] = automorphism_group(cf.params).group.value
    lie = lie_classify(tp)
    row["lie"] = lie.type.value
    row["alpha"], row["beta"] = lie.alpha, lie.beta
    return row
