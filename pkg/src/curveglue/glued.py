"""The glued function algebra on two curves with contact of order m.

An element is a pair of branch polynomials (f, g) whose m-jets at 0 agree;
this is the pullback of the two branch algebras over the truncated ring of
m-jets.  The module also realizes the correspondence between such pairs and
polynomials on the ambient plane restricted to the glued curves: extension
via F(x, y) = f(x) + y*(g(x) - f(x))/h(x) and restriction via substitution
of y = 0 and y = h(x).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmbeddingError, JetMismatch, SpaceMismatch
from .poly import Poly, Poly2, frac


@dataclass(frozen=True)
class SpaceSpec:
    """Two curves glued with contact of order m; m = 0 is the coordinate cross."""

    contact_order: int

    def __post_init__(self):
        if self.contact_order < 0:
            raise ValueError("contact order must be nonnegative")

    @property
    def m(self) -> int:
        return self.contact_order

    def __str__(self) -> str:
        return f"K{self.contact_order}"


def canonical_embedding(space: SpaceSpec) -> Poly:
    """The default embedding profile h(x) = x**(m+1)."""
    return Poly.monomial(space.m + 1)


@dataclass(frozen=True)
class GluedFunction:
    """Pair (f, g) of branch polynomials with matching m-jets at 0.

    Construct through :func:`make_glued`, which enforces the jet condition;
    the arithmetic here preserves it automatically.
    """

    f: Poly
    g: Poly
    space: SpaceSpec

    def _check_space(self, other: "GluedFunction") -> None:
        if self.space != other.space:
            raise SpaceMismatch(f"spaces differ: {self.space} vs {other.space}")

    def __add__(self, other: "GluedFunction") -> "GluedFunction":
        self._check_space(other)
        return GluedFunction(self.f + other.f, self.g + other.g, self.space)

    def __sub__(self, other: "GluedFunction") -> "GluedFunction":
        self._check_space(other)
        return GluedFunction(self.f - other.f, self.g - other.g, self.space)

    def __mul__(self, other: "GluedFunction") -> "GluedFunction":
        self._check_space(other)
        return GluedFunction(self.f * other.f, self.g * other.g, self.space)

    def jet_value(self, n: int) -> Fraction:
        """Common n-th Taylor coefficient at 0 (n <= m)."""
        if n > self.space.m:
            raise ValueError("jet index exceeds the contact order")
        return self.f.coeff(n)

    def __str__(self) -> str:
        from .dsl import render_glued

        return render_glued(self)


def make_glued(f: Poly, g: Poly, space: SpaceSpec) -> GluedFunction:
    """Build a glued function, verifying the defining jet condition."""
    for n in range(space.m + 1):
        if f.coeff(n) != g.coeff(n):
            raise JetMismatch(n, f.coeff(n), g.coeff(n))
    return GluedFunction(f, g, space)


def glued_arith(u: GluedFunction, v: GluedFunction, kind: str) -> GluedFunction:
    if kind == "add":
        return u + v
    if kind == "mul":
        return u * v
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def glued_constant(c, space: SpaceSpec) -> GluedFunction:
    p = Poly.of(frac(c))
    return GluedFunction(p, p, space)


def _check_embedding(h: Poly, space: SpaceSpec) -> None:
    if h.order_of_zero() != space.m + 1:
        raise EmbeddingError(
            f"embedding profile must have a zero of exact order {space.m + 1} at 0, "
            f"got order {h.order_of_zero()}"
        )


def extend_to_plane(u: GluedFunction, h: Poly | None = None) -> Poly2:
    """Extend (f, g) to the plane: F(x, y) = f + y*(g - f)/h.

    With the canonical h = x**(m+1) the division is exact for every glued
    function; with a custom profile a nonzero remainder is reported as an
    :class:`~curveglue.errors.ExactDivisionError`.
    """
    if h is None:
        h = canonical_embedding(u.space)
    _check_embedding(h, u.space)
    slope = (u.g - u.f).divide_exact(h)
    return Poly2.of(u.f, slope)


def restrict_to_branches(F: Poly2, h: Poly | None = None, space: SpaceSpec | None = None) -> GluedFunction:
    """Restrict a plane polynomial to the glued curves y = 0 and y = h(x).

    The result always satisfies the jet condition: the difference of the two
    restrictions is a multiple of h, hence of x**(m+1).
    """
    if space is None:
        raise ValueError("restriction requires the target space")
    if h is None:
        h = canonical_embedding(space)
    _check_embedding(h, space)
    return make_glued(F.at_y_zero(), F.substitute_y(h), space)


def random_poly(rng: random.Random, max_degree: int = 4, denom: int = 3) -> Poly:
    coeffs = [
        Fraction(rng.randint(-4, 4), rng.randint(1, denom))
        for _ in range(rng.randint(0, max_degree) + 1)
    ]
    return Poly.of(*coeffs)

def random_glued(space: SpaceSpec, rng: random.Random, max_degree: int = 4) -> GluedFunction:
    """Random pair with matching m-jets: shared low part + independent tails."""
    m = space.m
    f = random_poly(rng, max_degree)
    tail = random_poly(rng, max(max_degree - m - 1, 0))
    g = Poly.of(*(f.coeff(n) for n in range(m + 1))) + tail.shift(m + 1)
    return GluedFunction(f, g, space)
