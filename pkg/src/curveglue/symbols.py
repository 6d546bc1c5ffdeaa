"""The graded symbol algebra of the glued space.

A degree-k symbol is the class of an admissible order-k pair modulo pairs of
order k-1; concretely, the pair of top coefficients (a_k, b_k).  Membership
at degree k is the projection of the order-k admissibility conditions onto
the top-coefficient jets, computed here by exact variable elimination - so
a coefficient pair can be legal at one degree and illegal at another.

The product multiplies componentwise (composition of representatives); the
Poisson bracket is the top coefficient of the commutator,
l*a_s*a_t' - n*a_t*a_s' branchwise for degrees l and n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import OrderError, SpaceMismatch, SymbolConditionError
from .glued import SpaceSpec
from .operators import (
    AdmissibilityReport,
    BranchOp,
    ConditionSet,
    PairedOp,
    Violation,
    generate_conditions,
    pair_commutator,
    rref,
)
from .poly import ZERO, Poly


class SymbolVar(NamedTuple):
    """The unknown a^(r)(0) or b^(r)(0) of a top coefficient."""

    branch: str
    r: int

    @property
    def name(self) -> str:
        primes = "'" * self.r if self.r <= 3 else f"^({self.r})"
        return f"{self.branch}{primes}(0)"


@lru_cache(maxsize=None)
def symbol_conditions(m: int, degree: int) -> ConditionSet:
    """Degree stratum of the admissibility conditions: eliminate all
    lower-coefficient unknowns from the order-``degree`` system and keep the
    constraints that touch only the top coefficient pair."""
    full = generate_conditions(SpaceSpec(m), degree)
    variables = full.variables
    other = [i for i, v in enumerate(variables) if v.s != degree]
    top = [i for i, v in enumerate(variables) if v.s == degree]
    permuted = [[row[i] for i in other] + [row[i] for i in top] for row in full.rows]
    reduced = rref(permuted)
    n_other = len(other)
    kept = [row[n_other:] for row in reduced if not any(row[:n_other])]
    kept = rref(kept)
    top_vars = tuple(SymbolVar(variables[i].branch, variables[i].r) for i in top)
    return ConditionSet(SpaceSpec(m), degree, top_vars, tuple(tuple(r) for r in kept))


@dataclass(frozen=True)
class SymbolElem:
    """Graded symbol: a degree and the pair of leading coefficients.

    The degree is structural data, not inferable from the coefficients;
    validity is checked by :func:`check_symbol_conditions`."""

    degree: int
    a: Poly
    b: Poly
    space: SpaceSpec

    @property
    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero

    def __str__(self) -> str:
        from .dsl import render_symbol

        return render_symbol(self)


def check_symbol_conditions(s: SymbolElem) -> AdmissibilityReport:
    """Evaluate the degree stratum on the actual coefficient jets."""
    conditions = symbol_conditions(s.space.m, s.degree)
    values = {}
    for r in range(s.space.m + 1):
        values[SymbolVar("a", r)] = s.a.deriv_at_zero(r)
        values[SymbolVar("b", r)] = s.b.deriv_at_zero(r)
    violations = []
    for row, text in zip(conditions.rows, conditions.rendered):
        residual = sum(
            (c * values[v] for c, v in zip(row, conditions.variables) if c),
            Fraction(0),
        )
        if residual != 0:
            violations.append(Violation(text, residual, Fraction(0)))
    return AdmissibilityReport(s.space, s.degree, tuple(violations))


def make_symbol(degree: int, a: Poly, b: Poly, space: SpaceSpec) -> SymbolElem:
    if degree < 0:
        raise OrderError("symbol degree must be nonnegative")
    s = SymbolElem(degree, a, b, space)
    report = check_symbol_conditions(s)
    if not report.ok:
        raise SymbolConditionError(report)
    return s


def zero_symbol(degree: int, space: SpaceSpec) -> SymbolElem:
    return SymbolElem(degree, ZERO, ZERO, space)


def _require_valid(s: SymbolElem) -> None:
    report = check_symbol_conditions(s)
    if not report.ok:
        raise SymbolConditionError(report)


def _check_space(s: SymbolElem, t: SymbolElem) -> None:
    if s.space != t.space:
        raise SpaceMismatch(f"spaces differ: {s.space} vs {t.space}")


def take_symbol(op: BranchOp, k: int) -> Poly:
    """Top coefficient of an operator viewed at order k."""
    if op.order > k:
        raise OrderError(f"operator order {op.order} exceeds symbol degree {k}")
    return op.coeff(k)


def pair_symbol(op: PairedOp) -> SymbolElem:
    """The symbol of an admissible pair at its declared order; validity is a
    consequence of admissibility."""
    return make_symbol(
        op.order,
        take_symbol(op.d1, op.order),
        take_symbol(op.d2, op.order),
        op.space,
    )


def symbol_add(s: SymbolElem, t: SymbolElem) -> SymbolElem:
    _check_space(s, t)
    if s.degree != t.degree:
        raise OrderError("can only add symbols of equal degree")
    return SymbolElem(s.degree, s.a + t.a, s.b + t.b, s.space)


def symbol_scale(s: SymbolElem, c) -> SymbolElem:
    return SymbolElem(s.degree, s.a * c, s.b * c, s.space)


def symbol_mul(s: SymbolElem, t: SymbolElem) -> SymbolElem:
    """Graded product: degrees add, coefficients multiply componentwise."""
    _check_space(s, t)
    _require_valid(s)
    _require_valid(t)
    return make_symbol(s.degree + t.degree, s.a * t.a, s.b * t.b, s.space)


def poisson_bracket(s: SymbolElem, t: SymbolElem) -> SymbolElem:
    """Bracket of degrees l, n at degree l+n-1 via the leading-coefficient
    formula; {deg 0, deg 0} is the zero symbol at degree 0."""
    _check_space(s, t)
    _require_valid(s)
    _require_valid(t)
    l, n = s.degree, t.degree
    if l + n == 0:
        return zero_symbol(0, s.space)
    a = l * s.a * t.a.derive() - n * t.a * s.a.derive()
    b = l * s.b * t.b.derive() - n * t.b * s.b.derive()
    return make_symbol(l + n - 1, a, b, s.space)


def bracket_via_commutator(op_a: PairedOp, op_b: PairedOp) -> SymbolElem:
    """Independent route to the bracket: commute the operator pairs and take
    the symbol at degree l+n-1.  Must agree with :func:`poisson_bracket` of
    the two symbols."""
    if op_a.order + op_b.order == 0:
        return zero_symbol(0, op_a.space)
    return pair_symbol(pair_commutator(op_a, op_b))
