"""Multivariate polynomials reduced modulo one quadratic relation.

A :class:`Relation` ``sum_k w_k c_k^2 = 1`` describes a (weighted) circle or
sphere.  Every :class:`ConstrainedPoly` is kept in normal form: the last
variable appears with degree < 2, via ``c_last^2 -> (1 - sum_{k<last} w_k c_k^2) / w_last``.
Normal forms are unique, so a polynomial vanishes on the whole variety iff its
normal form is the zero polynomial (the variety is Zariski dense in the
quadric as long as it has a real point, which holds when some weight is
positive).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


class RelationKind(enum.Enum):
    CircleRelation = "CircleRelation"
    SphereRelation = "SphereRelation"
    NoRelation = "None"


@dataclass(frozen=True)
class Relation:
    weights: tuple

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def kind(self) -> RelationKind:
        return {2: RelationKind.CircleRelation, 3: RelationKind.SphereRelation}.get(
            self.nvars, RelationKind.NoRelation)

    def residual(self, point) -> Fraction:
        return sum((w * c * c for w, c in zip(self.weights, point)), Fraction(0)) - 1


CIRCLE = Relation((Fraction(1), Fraction(1)))
SPHERE = Relation((Fraction(1), Fraction(1), Fraction(1)))


def _is_scalar(x) -> bool:
    return not isinstance(x, ConstrainedPoly) and not isinstance(x, bool)


class ConstrainedPoly:
    """Polynomial in ``nvars`` variables; ``relation=None`` means no reduction."""

    __slots__ = ("terms", "nvars", "relation")

    def __init__(self, terms: dict, nvars: int, relation: Optional[Relation] = None):
        if relation is not None and relation.nvars != nvars:
            raise ValueError("relation and polynomial disagree on the number of variables")
        self.nvars = nvars
        self.relation = relation
        self.terms = self._normalize(terms)

    # construction

    @classmethod
    def constant(cls, value, nvars: int, relation: Optional[Relation] = None) -> "ConstrainedPoly":
        return cls({(0,) * nvars: value}, nvars, relation)

    @classmethod
    def variable(cls, k: int, nvars: int, relation: Optional[Relation] = None) -> "ConstrainedPoly":
        mono = tuple(int(j == k) for j in range(nvars))
        return cls({mono: Fraction(1)}, nvars, relation)

    @classmethod
    def variables(cls, relation: Relation) -> list["ConstrainedPoly"]:
        return [cls.variable(k, relation.nvars, relation) for k in range(relation.nvars)]

    def _normalize(self, terms: dict) -> dict:
        out: dict = {}
        work = list(terms.items())
        last = self.nvars - 1
        while work:
            mono, c = work.pop()
            if c == 0:
                continue
            if self.relation is not None and mono[last] >= 2:
                # c_last^2 = (1 - sum_{k<last} w_k c_k^2) / w_last
                w = self.relation.weights
                base = list(mono)
                base[last] -= 2
                work.append((tuple(base), c / w[last]))
                for k in range(last):
                    m = list(base)
                    m[k] += 2
                    work.append((tuple(m), -c * w[k] / w[last]))
                continue
            out[mono] = out.get(mono, 0) + c
            if out[mono] == 0:
                del out[mono]
        return out

    def _like(self, terms: dict) -> "ConstrainedPoly":
        return ConstrainedPoly(terms, self.nvars, self.relation)

    def _lift(self, other) -> "ConstrainedPoly":
        if isinstance(other, ConstrainedPoly):
            if other.nvars != self.nvars or other.relation != self.relation:
                raise ValueError("polynomials live in different rings")
            return other
        return self._like({(0,) * self.nvars: other})

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, ConstrainedPoly) and not _is_scalar(other):
            return NotImplemented
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if _is_scalar(other):
            return self._like({m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return self._like(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self._like({m: c / other for m, c in self.terms.items()})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        try:
            return (self - other).is_zero()
        except (ValueError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point):
        acc = 0
        for mono, c in self.terms.items():
            t = c
            for v, e in zip(point, mono):
                if e:
                    t = t * v ** e
            acc = acc + t
        return acc

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            vars_ = "*".join(f"c{k}^{e}" if e > 1 else f"c{k}" for k, e in enumerate(mono) if e)
            parts.append(f"{c}*{vars_}" if vars_ else f"{c}")
        return " + ".join(parts)
