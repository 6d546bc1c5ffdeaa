"""Random generators for admissible pairs and valid symbols.

Both sample the solution space of the generated jet-condition systems: free
unknowns get random rationals, pivot unknowns are solved from the reduced
rows, and the prescribed jets are completed with random higher-order terms.
Used by the test suite and handy for experiments.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .glued import SpaceSpec, random_poly
from .operators import BranchOp, ConditionSet, JetVar, PairedOp, generate_conditions
from .poly import Poly
from .symbols import SymbolElem, SymbolVar, symbol_conditions


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def solve_homogeneous(conditions: ConditionSet, rng: random.Random) -> dict:
    """A random point of the solution space of the reduced system."""
    variables = conditions.variables
    pivots = {}
    for row in conditions.rows:
        lead = next(i for i, c in enumerate(row) if c)
        pivots[lead] = row
    values = [None] * len(variables)
    for i in range(len(variables)):
        if i not in pivots:
            values[i] = _random_fraction(rng)
    for lead, row in pivots.items():
        values[lead] = -sum(
            (row[j] * values[j] for j in range(len(variables)) if j != lead and row[j]),
            Fraction(0),
        )
    return dict(zip(variables, values))


def _poly_with_jet(jets: list[Fraction], rng: random.Random, max_degree: int) -> Poly:
    """Polynomial with prescribed derivatives at 0 plus a random tail."""
    m = len(jets) - 1
    head = Poly.of(*(jets[r] / math.factorial(r) for r in range(m + 1)))
    tail = random_poly(rng, max(max_degree - m - 1, 0))
    return head + tail.shift(m + 1)


def random_admissible_pair(
    space: SpaceSpec, k: int, rng: random.Random, max_degree: int = 4
) -> PairedOp:
    """Random admissible pair of nominal order k with coefficient degrees up
    to max_degree."""
    values = solve_homogeneous(generate_conditions(space, k), rng)
    m = space.m
    a_coeffs, b_coeffs = [], []
    for s in range(k + 1):
        a_coeffs.append(
            _poly_with_jet([values[JetVar("a", s, r)] for r in range(m + 1)], rng, max_degree)
        )
        b_coeffs.append(
            _poly_with_jet([values[JetVar("b", s, r)] for r in range(m + 1)], rng, max_degree)
        )
    return PairedOp(BranchOp.of(*a_coeffs), BranchOp.of(*b_coeffs), space, k)


def random_symbol(
    space: SpaceSpec, degree: int, rng: random.Random, max_degree: int = 4
) -> SymbolElem:
    """Random valid symbol of the given degree."""
    values = solve_homogeneous(symbol_conditions(space.m, degree), rng)
    m = space.m
    a = _poly_with_jet([values[SymbolVar("a", r)] for r in range(m + 1)], rng, max_degree)
    b = _poly_with_jet([values[SymbolVar("b", r)] for r in range(m + 1)], rng, max_degree)
    return SymbolElem(degree, a, b, space)
