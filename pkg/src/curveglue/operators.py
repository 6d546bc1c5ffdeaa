"""Differential operators on the branches and admissible pairs on the glued
algebra.

A branch operator is a polynomial-coefficient operator sum a_i(x) d^i/dx^i.
A pair (D1, D2) acts on the glued algebra exactly when, for every glued
function (f, g) and every derivative order i <= m, the i-th derivatives of
D1 f and D2 g agree at 0.  That requirement is linear in the coefficient
jets a_s^(r)(0), b_s^(r)(0) with s <= k, r <= m, so it is captured by a
finite linear system:

* :func:`generate_conditions` instantiates the defining equation on a
  spanning family of glued pairs and row-reduces the result over the
  rationals - this generated system is the ground truth;
* :func:`probe_admissible` is the independent brute-force oracle: it applies
  the operators to the spanning family directly and compares output jets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import AdmissibilityError, ClosureBugError, OrderError, SpaceMismatch
from .glued import GluedFunction, SpaceSpec, make_glued
from .poly import NEG_INF, ZERO, Poly

# ---------------------------------------------------------------------------
# Branch operators


def _trim_ops(coeffs):
    xs = list(coeffs)
    while xs and xs[-1].is_zero:
        xs.pop()
    return tuple(xs)


@dataclass(frozen=True)
class BranchOp:
    """Operator sum a_i(x) d^i on one branch; ``coeffs[i]`` is a_i.

    The top coefficient is nonzero (zero operator = empty tuple)."""

    coeffs: tuple[Poly, ...]

    @staticmethod
    def of(*coeffs: Poly) -> "BranchOp":
        return BranchOp(_trim_ops(coeffs))

    @staticmethod
    def mult(a: Poly) -> "BranchOp":
        """Multiplication by a."""
        return BranchOp.of(a)

    @staticmethod
    def derivative(coefficient: Poly | None = None, power: int = 1) -> "BranchOp":
        """coefficient * d^power (coefficient defaults to 1)."""
        c = coefficient if coefficient is not None else Poly.of(1)
        return BranchOp.of(*([ZERO] * power + [c]))

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Poly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __add__(self, other: "BranchOp") -> "BranchOp":
        n = max(len(self.coeffs), len(other.coeffs))
        return BranchOp.of(*(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "BranchOp":
        return BranchOp(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "BranchOp") -> "BranchOp":
        return self + (-other)

    def apply(self, p: Poly) -> Poly:
        result = ZERO
        deriv = p
        for i, a in enumerate(self.coeffs):
            if i:
                deriv = deriv.derive()
            if not a.is_zero:
                result = result + a * deriv
        return result

    def __str__(self) -> str:
        from .dsl import render_op

        return render_op(self)


ZERO_OP = BranchOp(())


def apply(op: BranchOp, p: Poly) -> Poly:
    return op.apply(p)


def compose(op_a: BranchOp, op_b: BranchOp) -> BranchOp:
    """Operator composition: apply op_b first, then op_a.

    Uses a_i d^i (b_j d^j .) = a_i sum_r C(i,r) b_j^(r) d^(i-r+j).
    """
    if op_a.is_zero or op_b.is_zero:
        return ZERO_OP
    out: dict[int, Poly] = {}
    for i, a in enumerate(op_a.coeffs):
        if a.is_zero:
            continue
        for j, b in enumerate(op_b.coeffs):
            if b.is_zero:
                continue
            b_deriv = b
            for r in range(i + 1):
                if r:
                    b_deriv = b_deriv.derive()
                if b_deriv.is_zero:
                    break
                d = i - r + j
                term = a * (math.comb(i, r) * b_deriv)
                out[d] = out.get(d, ZERO) + term
    top = max(out) if out else -1
    return BranchOp.of(*(out.get(d, ZERO) for d in range(top + 1)))


def commutator(op_a: BranchOp, op_b: BranchOp) -> BranchOp:
    return compose(op_a, op_b) - compose(op_b, op_a)


def delta_reduce(op: BranchOp, a: Poly) -> BranchOp:
    """The order-lowering map: commutator of op with multiplication by a."""
    return commutator(op, BranchOp.mult(a))


def verify_order(op: BranchOp, k: int, probe_degree: int) -> bool:
    """Check order <= k via vanishing of all (k+1)-fold delta chains.

    Chains run over multisets of monomial exponents 1..probe_degree
    (delta by a constant is identically zero, so exponent 0 adds nothing).
    """
    if k < 0:
        return op.is_zero
    for exps in itertools.combinations_with_replacement(range(1, probe_degree + 1), k + 1):
        reduced = op
        for n in exps:
            reduced = delta_reduce(reduced, Poly.monomial(n))
            if reduced.is_zero:
                break
        if not reduced.is_zero:
            return False
    return True


# ---------------------------------------------------------------------------
# Jet-condition generation


class JetVar(NamedTuple):
    """The unknown a_s^(r)(0) (branch 'a') or b_s^(r)(0) (branch 'b')."""

    branch: str
    s: int
    r: int

    @property
    def name(self) -> str:
        primes = "'" * self.r if self.r <= 3 else f"^({self.r})"
        return f"{self.branch}{self.s}{primes}(0)"


def _variables(m: int, k: int) -> tuple[JetVar, ...]:
    # Pivot priority: higher coefficient index first, higher derivative
    # first, branch b before a - so reduced rows read like hand-written
    # tables (e.g. "a2'(0) + a1(0) = 0", "b0(0) - a0(0) = 0").
    out = []
    for s in range(k, -1, -1):
        for r in range(m, -1, -1):
            out.append(JetVar("b", s, r))
            out.append(JetVar("a", s, r))
    return tuple(out)


def rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row-echelon form over the rationals; zero rows dropped,
    rows sorted by pivot column."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivot_rows: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for col in range(ncols):
        target = None
        for row in rows:
            if row[col] != 0 and all(row[c] == 0 for c in range(col)):
                target = row
                break
        if target is None:
            continue
        rows.remove(target)
        inv = 1 / target[col]
        target = [c * inv for c in target]
        for other in rows:
            if other[col] != 0:
                f = other[col]
                for c in range(ncols):
                    other[c] -= f * target[c]
        for other in pivot_rows:
            if other[col] != 0:
                f = other[col]
                for c in range(ncols):
                    other[c] -= f * target[c]
        pivot_rows.append(target)
        pivot_cols.append(col)
    order = sorted(range(len(pivot_rows)), key=lambda i: pivot_cols[i])
    return [pivot_rows[i] for i in order]


def render_linear(row, variables) -> str:
    """Render a homogeneous constraint row as '... = 0'."""
    parts = []
    for coeff, var in zip(row, variables):
        if coeff == 0:
            continue
        mag = abs(coeff)
        body = var.name if mag == 1 else f"{mag}*{var.name}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    if not parts:
        return "0 = 0"
    return " ".join(parts) + " = 0"


@dataclass(frozen=True)
class ConditionSet:
    """Reduced linear system on the coefficient jets at 0 that is equivalent
    to admissibility at order k on the given space."""

    space: SpaceSpec
    order: int
    variables: tuple[JetVar, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def rendered(self) -> tuple[str, ...]:
        return tuple(render_linear(row, self.variables) for row in self.rows)

    def residuals(self, values: dict[JetVar, Fraction]) -> list[Fraction]:
        return [
            sum((c * values.get(v, Fraction(0)) for c, v in zip(row, self.variables)),
                Fraction(0))
            for row in self.rows
        ]


def spanning_family(space: SpaceSpec, max_diag: int, max_branch: int):
    """Glued pairs spanning all pairs with matching m-jets up to the given
    degrees: diagonal monomials plus branch-supported monomials of degree
    above the contact order."""
    m = space.m
    for n in range(max_diag + 1):
        p = Poly.monomial(n)
        yield p, p
    for n in range(m + 1, max_branch + 1):
        p = Poly.monomial(n)
        yield p, ZERO
        yield ZERO, p


def _defining_row(variables, f: Poly, g: Poly, i: int) -> list[Fraction]:
    """Row of the equation (D1 f)^(i)(0) = (D2 g)^(i)(0) in the jet unknowns.

    (D f)^(i)(0) = sum_s sum_{r<=i} C(i,r) a_s^(r)(0) f^(s+i-r)(0)."""
    row = []
    for var in variables:
        if var.r > i:
            row.append(Fraction(0))
            continue
        p = f if var.branch == "a" else g
        value = math.comb(i, var.r) * p.deriv_at_zero(var.s + i - var.r)
        row.append(value if var.branch == "a" else -value)
    return row


@lru_cache(maxsize=None)
def _generate(m: int, k: int) -> ConditionSet:
    space = SpaceSpec(m)
    variables = _variables(m, k)
    rows = []
    for f, g in spanning_family(space, max_diag=k + m, max_branch=k + m + 1):
        for i in range(m + 1):
            rows.append(_defining_row(variables, f, g, i))
    reduced = rref(rows)
    return ConditionSet(space, k, variables, tuple(tuple(r) for r in reduced))


def generate_conditions(space: SpaceSpec, k: int) -> ConditionSet:
    """The reduced linear system equivalent to admissibility at order k."""
    if k < 0:
        raise OrderError("operator order must be nonnegative")
    return _generate(space.m, k)


# ---------------------------------------------------------------------------
# Admissibility checks


@dataclass(frozen=True)
class Violation:
    constraint: str
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class AdmissibilityReport:
    space: SpaceSpec
    order: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def coefficient_jets(d1: BranchOp, d2: BranchOp, space: SpaceSpec, k: int):
    values = {}
    for s in range(k + 1):
        for r in range(space.m + 1):
            values[JetVar("a", s, r)] = d1.coeff(s).deriv_at_zero(r)
            values[JetVar("b", s, r)] = d2.coeff(s).deriv_at_zero(r)
    return values


def check_admissible(d1: BranchOp, d2: BranchOp, space: SpaceSpec, k: int) -> AdmissibilityReport:
    """Evaluate the generated conditions on the actual coefficient jets."""
    if d1.order > k or d2.order > k:
        raise OrderError(f"branch orders exceed the declared order {k}")
    conditions = generate_conditions(space, k)
    values = coefficient_jets(d1, d2, space, k)
    violations = []
    for row, text in zip(conditions.rows, conditions.rendered):
        residual = sum(
            (c * values[v] for c, v in zip(row, conditions.variables) if c),
            Fraction(0),
        )
        if residual != 0:
            violations.append(Violation(text, residual, Fraction(0)))
    return AdmissibilityReport(space, k, tuple(violations))


def probe_admissible(d1: BranchOp, d2: BranchOp, space: SpaceSpec, probe_degree: int) -> bool:
    """Brute-force oracle: apply both operators to the spanning family and
    compare output m-jets at 0.  Independent of the generated conditions."""
    m = space.m
    for f, g in spanning_family(space, max_diag=probe_degree, max_branch=probe_degree):
        if d1.apply(f).jet(m) != d2.apply(g).jet(m):
            return False
    return True


def default_probe_degree(space: SpaceSpec, k: int) -> int:
    # (D f)^(i)(0), i <= m, sees f-jets only up to k + m; +2 is margin.
    return k + space.m + 2


# ---------------------------------------------------------------------------
# Admissible pairs


@dataclass(frozen=True)
class PairedOp:
    """Admissible pair (D1, D2) of order k; build through :func:`make_pair`."""

    d1: BranchOp
    d2: BranchOp
    space: SpaceSpec
    order: int

    def _check_space(self, other) -> None:
        if self.space != other.space:
            raise SpaceMismatch(f"spaces differ: {self.space} vs {other.space}")

    def __str__(self) -> str:
        from .dsl import render_paired

        return render_paired(self)


def make_pair(d1: BranchOp, d2: BranchOp, space: SpaceSpec, order: int | None = None) -> PairedOp:
    if order is None:
        order = max(d1.order, d2.order, 0)
        order = 0 if order == NEG_INF else int(order)
    report = check_admissible(d1, d2, space, order)
    if not report.ok:
        raise AdmissibilityError(report)
    return PairedOp(d1, d2, space, order)


def pair_apply(op: PairedOp, u: GluedFunction) -> GluedFunction:
    if op.space != u.space:
        raise SpaceMismatch(f"spaces differ: {op.space} vs {u.space}")
    # Admissibility is exactly the statement that this stays glued.
    return make_glued(op.d1.apply(u.f), op.d2.apply(u.g), op.space)


def _closed_pair(d1: BranchOp, d2: BranchOp, space: SpaceSpec, order: int, what: str) -> PairedOp:
    report = check_admissible(d1, d2, space, order)
    if not report.ok:
        raise ClosureBugError(
            f"{what} of admissible pairs failed the admissibility check at "
            f"order {order}; this contradicts the closure theorem and "
            f"indicates an internal bug: "
            + "; ".join(v.constraint for v in report.violations)
        )
    return PairedOp(d1, d2, space, order)


def pair_compose(op_a: PairedOp, op_b: PairedOp) -> PairedOp:
    op_a._check_space(op_b)
    return _closed_pair(
        compose(op_a.d1, op_b.d1),
        compose(op_a.d2, op_b.d2),
        op_a.space,
        op_a.order + op_b.order,
        "composition",
    )


def pair_commutator(op_a: PairedOp, op_b: PairedOp) -> PairedOp:
    op_a._check_space(op_b)
    order = max(op_a.order + op_b.order - 1, 0)
    return _closed_pair(
        commutator(op_a.d1, op_b.d1),
        commutator(op_a.d2, op_b.d2),
        op_a.space,
        order,
        "commutator",
    )
