"""Binary quadratic forms, definiteness, and the division tests for T_p and T_d.

For x = alpha*1 + beta*i + gamma*w + delta*v in a T_p algebra,

    det(L_x) = u^2 + p(gamma, delta)*u + q(gamma, delta)*N,

with u = alpha^2 + beta^2 and N = gamma^2 + delta^2.  The algebra is a division
algebra iff this never vanishes for x != 0, which comes down to: q positive
definite, and no direction (gamma, delta) with p < 0 and p^2 - 4*q*N >= 0.
The second condition is decided exactly with Sturm sequences.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import poly as P
from .algebra import TdParams, TpParams
from .exact import sign_two_sqrt_expr, sqrt_exact, sqrt_rational


@dataclass(frozen=True)
class QuadForm2:
    """m11*x^2 + 2*m12*x*y + m22*y^2."""

    m11: Fraction
    m12: Fraction
    m22: Fraction

    def __post_init__(self):
        for name in ("m11", "m12", "m22"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, xx, xy, yy) -> "QuadForm2":
        """From the coefficients of x^2, x*y and y^2."""
        return cls(xx, Fraction(xy) / 2, yy)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.m11, 2 * self.m12, self.m22

    def __call__(self, x, y):
        return self.m11 * x * x + 2 * self.m12 * x * y + self.m22 * y * y

    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m12

    def trace(self) -> Fraction:
        return self.m11 + self.m22

    def matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m12, self.m22]], dtype=object)

    def is_zero(self) -> bool:
        return self.m11 == 0 and self.m12 == 0 and self.m22 == 0

    def dehomogenize(self) -> P.Poly:
        """f(t, 1) as a polynomial in t."""
        return P.poly([self.m22, 2 * self.m12, self.m11])

    def __str__(self):
        xx, xy, yy = self.coeffs
        return f"{xx}*y^2 + {xy}*y*z + {yy}*z^2"


class Definiteness(enum.Enum):
    PositiveDefinite = "PositiveDefinite"
    NegativeDefinite = "NegativeDefinite"
    PositiveSemi = "PositiveSemi"
    NegativeSemi = "NegativeSemi"
    Indefinite = "Indefinite"
    Zero = "Zero"

    @property
    def definite(self) -> bool:
        return self in (Definiteness.PositiveDefinite, Definiteness.NegativeDefinite)


def definiteness(f: QuadForm2) -> Definiteness:
    if f.is_zero():
        return Definiteness.Zero
    d = f.det()
    if d > 0:
        return Definiteness.PositiveDefinite if f.m11 > 0 else Definiteness.NegativeDefinite
    if d < 0:
        return Definiteness.Indefinite
    # rank one: the nonzero diagonal entry carries the sign
    return Definiteness.PositiveSemi if f.m11 > 0 or f.m22 > 0 else Definiteness.NegativeSemi


def forms_pq(params: TpParams) -> tuple[QuadForm2, QuadForm2]:
    a, b, c, d, e, f, g, h = params.as_tuple()
    p = QuadForm2.from_coeffs(-a - d, b - c - e - h, f - g)
    q = QuadForm2.from_coeffs(a * d - b * c, a * h + d * e - b * g - c * f, e * h - f * g)
    return p, q


def forms_rs(params: TpParams) -> tuple[QuadForm2, QuadForm2]:
    """(y*w + z*v)^2 = r(y, z)*1 + s(y, z)*i."""
    a, b, c, d, e, f, g, h = params.as_tuple()
    return QuadForm2.from_coeffs(a, c + e, g), QuadForm2.from_coeffs(b, d + f, h)


def det_Lx_closed_form(params: TpParams, x):
    """det(L_x) from the forms p and q; exact for exact coordinates."""
    alpha, beta, gamma, delta = x
    p, q = forms_pq(params)
    if any(isinstance(v, float) or isinstance(v, np.floating) for v in x):
        p = QuadForm2Float.of(p)
        q = QuadForm2Float.of(q)
    u = alpha * alpha + beta * beta
    n = gamma * gamma + delta * delta
    return u * u + p(gamma, delta) * u + q(gamma, delta) * n


@dataclass(frozen=True)
class QuadForm2Float:
    m11: float
    m12: float
    m22: float

    @classmethod
    def of(cls, f: QuadForm2) -> "QuadForm2Float":
        return cls(float(f.m11), float(f.m12), float(f.m22))

    def __call__(self, x, y):
        return self.m11 * x * x + 2 * self.m12 * x * y + self.m22 * y * y


class CriterionPath(enum.Enum):
    QNotPosDef = "QNotPosDef"
    StrictInequalityFails = "StrictInequalityFails"
    Holds = "Holds"
    TdCriterion = "TdCriterion"


@dataclass(frozen=True, eq=False)
class DivisionVerdict:
    is_division: bool
    criterion_path: CriterionPath
    witness: Optional[np.ndarray] = None
    witness_exact: bool = False

    def __bool__(self):
        return self.is_division


class Sufficiency(enum.Enum):
    Sufficient1 = "Sufficient1"
    Sufficient2 = "Sufficient2"
    Inconclusive = "Inconclusive"


WITNESS_WIDTH = Fraction(1, 2**40)


def _null_direction(f: QuadForm2):
    """A nonzero (y, z) with f(y, z) = 0, exact, or None when f is definite."""
    if f.m11 == 0:
        return Fraction(1), Fraction(0)
    d = f.det()
    if d > 0:
        return None
    # y/z = (-m12 + sqrt(-det)) / m11
    return (sqrt_exact(-d) - f.m12) / f.m11, Fraction(1)


def _exact_witness(coords) -> np.ndarray:
    out = np.empty(len(coords), dtype=object)
    for k, v in enumerate(coords):
        out[k] = Fraction(v) if isinstance(v, int) else v
    return out


def _alpha_witness(p: QuadForm2, q: QuadForm2, gamma, delta):
    """Element alpha*1 + gamma*w + delta*v killing det(L_x), given p < 0 <= F there.

    alpha^2 is the larger root of u^2 + p*u + q*N.  Exact when the numbers
    allow it, float otherwise.
    """
    pv, qv = p(gamma, delta), q(gamma, delta)
    n = gamma * gamma + delta * delta
    if all(isinstance(v, Fraction) for v in (gamma, delta)):
        disc = pv * pv - 4 * qv * n
        root = sqrt_rational(disc)
        if root is not None:
            u = (-pv + root) / 2
            return _exact_witness([sqrt_exact(u), 0, gamma, delta]), True
    g, d = float(gamma), float(delta)
    pf, qf = float(pv), float(qv)
    nf = g * g + d * d
    disc = max(pf * pf - 4 * qf * nf, 0.0)
    u = (-pf + math.sqrt(disc)) / 2
    return np.array([math.sqrt(max(u, 0.0)), 0.0, g, d]), False


def _q_failure_witness(p: QuadForm2, q: QuadForm2):
    direction = _null_direction(q)
    if direction is not None:
        return _exact_witness([0, 0, *direction]), True
    # q negative definite: det(L_x) < 0 at u = 0 and > 0 for large u
    return _alpha_witness(p, q, Fraction(1), Fraction(0))


def _scan_points(p_t: P.Poly, F: P.Poly):
    """Rational or refined sample points covering every sign pattern of (p_t, F) on R.

    Yields (t, exact) where ``exact`` says whether t is exactly a sample
    (a rational inside a gap, or an exact rational root) or a refined
    approximation of an irrational root of F.
    """
    sp = P.squarefree(p_t) if P.degree(p_t) >= 1 else ()
    sF = P.squarefree(F) if P.degree(F) >= 1 else ()
    tagged = [(iv, "p") for iv in (P.isolate_roots(sp) if sp else [])]
    tagged += [(iv, "F") for iv in (P.isolate_roots(sF) if sF else [])]
    # refine until the intervals are pairwise disjoint
    while True:
        tagged.sort(key=lambda it: it[0].lo)
        clash = [
            k for k in range(len(tagged) - 1)
            if tagged[k][0].hi >= tagged[k + 1][0].lo
        ]
        if not clash:
            break
        for k in clash:
            for m in (k, k + 1):
                iv, who = tagged[m]
                tagged[m] = (P.bisect(sp if who == "p" else sF, iv), who)
    if not tagged:
        yield Fraction(0), True, None
        return
    yield tagged[0][0].lo - 1, True, None
    for k, (iv, who) in enumerate(tagged):
        if who == "F":
            yield None, iv.exact, (iv, sF)
        nxt = tagged[k + 1][0].lo if k + 1 < len(tagged) else iv.hi + 2
        yield (iv.hi + nxt) / 2, True, None


def division_tp(params: TpParams) -> DivisionVerdict:
    p, q = forms_pq(params)
    if definiteness(q) != Definiteness.PositiveDefinite:
        w, exact = _q_failure_witness(p, q)
        return DivisionVerdict(False, CriterionPath.QNotPosDef, w, exact)

    def fails_at(gamma, delta) -> bool:
        pv = p(gamma, delta)
        return pv < 0 and pv * pv >= 4 * q(gamma, delta) * (gamma * gamma + delta * delta)

    if fails_at(Fraction(1), Fraction(0)):
        w, exact = _alpha_witness(p, q, Fraction(1), Fraction(0))
        return DivisionVerdict(False, CriterionPath.StrictInequalityFails, w, exact)

    p_t = p.dehomogenize()
    q_t = q.dehomogenize()
    F = P.sub(P.mul(p_t, p_t), P.scale(P.mul(q_t, P.poly([1, 0, 1])), 4))
    for t, _, root in _scan_points(p_t, F):
        if root is None:
            if fails_at(t, Fraction(1)):
                w, exact = _alpha_witness(p, q, t, Fraction(1))
                return DivisionVerdict(False, CriterionPath.StrictInequalityFails, w, exact)
            continue
        iv, sF = root
        # F vanishes here; p has no root in the interval, so its sign is read at hi
        if P.evaluate(p_t, iv.hi) < 0:
            if iv.exact:
                w, exact = _alpha_witness(p, q, iv.lo, Fraction(1))
            else:
                iv = P.refine(sF, iv, WITNESS_WIDTH)
                w, exact = _alpha_witness(p, q, float(iv.mid), 1.0)
            return DivisionVerdict(False, CriterionPath.StrictInequalityFails, w, exact)
    return DivisionVerdict(True, CriterionPath.Holds)


def _min_eig_parts(f: QuadForm2) -> tuple[Fraction, Fraction]:
    """(trace, discriminant) so that the smaller eigenvalue is (trace - sqrt(disc))/2."""
    return f.trace(), (f.m11 - f.m22) ** 2 + 4 * f.m12 ** 2


def division_tp_sufficient(params: TpParams) -> Sufficiency:
    p, q = forms_pq(params)
    if definiteness(q) != Definiteness.PositiveDefinite:
        return Sufficiency.Inconclusive
    if definiteness(p) in (Definiteness.PositiveDefinite, Definiteness.PositiveSemi, Definiteness.Zero):
        return Sufficiency.Sufficient1
    tP, DP = _min_eig_parts(p)
    tQ, DQ = _min_eig_parts(q)
    # p not semidefinite, so min eig(P) < 0 and the inequality is m^2 < 4n:
    # (tP^2 + DP)/4 - 2 tQ - (tP/2) sqrt(DP) + 2 sqrt(DQ) < 0
    s = sign_two_sqrt_expr((tP * tP + DP) / 4 - 2 * tQ, -tP / 2, DP, 2, DQ)
    return Sufficiency.Sufficient2 if s < 0 else Sufficiency.Inconclusive


def division_td(params: TdParams) -> DivisionVerdict:
    g, h = params.g, params.h
    bound = g + h * h / 4
    if bound < 0:
        return DivisionVerdict(True, CriterionPath.TdCriterion)
    # gamma^2 - h*gamma*delta - g*delta^2 = 0 at delta = 1; discriminant 4*bound >= 0
    gamma = (h + sqrt_exact(4 * bound)) / 2
    return DivisionVerdict(False, CriterionPath.TdCriterion, _exact_witness([0, 0, gamma, 1]), True)


def witness_det(params: TpParams, verdict: DivisionVerdict):
    """det(L_x) at the verdict's witness, or None."""
    if verdict.witness is None:
        return None
    return det_Lx_closed_form(params, list(verdict.witness))
