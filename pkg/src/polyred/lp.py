"""Exact linear-programming feasibility over rationals.

The solver is a phase-1 simplex with Bland's rule (guaranteed termination);
instance sizes are desk-scale so exactness trumps pivot counts. Strict
separations are expressed with an integer slack of 1, which is sound after
clearing denominators since every input here is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ._kernel import lp_phase1
from .errors import InternalCheckError, ValidationError

LE, EQ, GE = "<=", "=", ">="
_RELS = (LE, EQ, GE)


@dataclass(frozen=True)
class LinConstraint:
    """A linear constraint ``sum(coeffs[l] * x[l]) rel rhs`` over labeled coords.

    Labels are arbitrary hashables; plain ints address coordinates directly.
    Evaluation on a 0/1 point is exact.
    """

    coeffs: tuple
    rel: str
    rhs: Fraction

    @classmethod
    def make(cls, coeffs: Mapping, rel: str, rhs) -> "LinConstraint":
        if rel not in _RELS:
            raise ValidationError(f"unknown relation {rel!r}")
        items = tuple(sorted(((k, Fraction(v)) for k, v in coeffs.items() if v != 0),
                             key=lambda kv: repr(kv[0])))
        return cls(items, rel, Fraction(rhs))

    def coeff_dict(self) -> dict:
        return dict(self.coeffs)

    def evaluate(self, value_of) -> Fraction:
        return sum((c * value_of(k) for k, c in self.coeffs), Fraction(0))

    def satisfied(self, value_of) -> bool:
        lhs = self.evaluate(value_of)
        if self.rel == LE:
            return lhs <= self.rhs
        if self.rel == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


def lp_feasible(constraints: list[LinConstraint], dim: int) -> list[Fraction] | None:
    """Exact feasibility: a rational point satisfying every constraint, or None.

    Constraint labels must be ints in ``range(dim)``. Variables are free;
    add explicit bound constraints if needed. The returned point is
    re-checked against every constraint before being handed back.
    """
    rows = []
    rels = []
    rhs = []
    for con in constraints:
        row = [Fraction(0)] * dim
        for k, c in con.coeffs:
            if not (isinstance(k, int) and 0 <= k < dim):
                raise ValidationError(f"lp_feasible: label {k!r} is not a coordinate < {dim}")
            row[k] = c
        rows.append(row)
        rels.append(con.rel)
        rhs.append(con.rhs)
    x = lp_phase1(rows, rels, rhs, dim, False)
    if x is None:
        return None
    point = list(x)
    for con in constraints:
        if not con.satisfied(lambda k: point[k]):
            raise InternalCheckError("lp_feasible: solver returned a non-satisfying point")
    return point
