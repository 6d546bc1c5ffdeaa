"""Exact polynomial arithmetic over the rationals.

Univariate polynomials with ``Fraction`` coefficients stand in for smooth
functions on a single branch.  Every condition checked by this package is a
finite-jet condition at 0, so polynomials witness all relevant behaviours
exactly; there is no floating point anywhere.  A single bivariate type
(:class:`Poly2`) supports the plane-extension/restriction correspondence.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeCapExceeded, ExactDivisionError

NEG_INF = float("-inf")

_degree_cap = 32


def get_degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> None:
    """Set the global bound on result degrees (memory guard, default 32)."""
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    _degree_cap = cap


@contextmanager
def degree_cap(cap: int):
    """Temporarily raise/lower the degree cap."""
    global _degree_cap
    old = _degree_cap
    _degree_cap = cap
    try:
        yield
    finally:
        _degree_cap = old


def frac(value) -> Fraction:
    """Coerce ints, strings like '3/2' and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The coefficient tuple carries no trailing zeros, so the zero polynomial
    is the empty tuple and ``degree`` is -inf for it.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(_trim([frac(c) for c in coeffs]))

    @staticmethod
    def monomial(power: int, coefficient=1) -> "Poly":
        c = frac(coefficient)
        if c == 0:
            return ZERO
        return Poly((Fraction(0),) * power + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(_trim(out))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = frac(other)
            return Poly(_trim([c * a for a in self.coeffs]))
        if self.is_zero or other.is_zero:
            return ZERO
        deg = len(self.coeffs) + len(other.coeffs) - 2
        if deg > _degree_cap:
            raise DegreeCapExceeded(deg, _degree_cap)
        out = [Fraction(0)] * (deg + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(_trim(out))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int) -> "Poly":
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def derive(self) -> "Poly":
        """Formal derivative."""
        return Poly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def derive_n(self, n: int) -> "Poly":
        p = self
        for _ in range(n):
            p = p.derive()
        return p

    def __call__(self, t) -> Fraction:
        t = frac(t)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def deriv_at_zero(self, r: int) -> Fraction:
        """r-th derivative at 0, i.e. r! times the r-th coefficient."""
        return self.coeff(r) * math.factorial(r)

    def jet(self, order: int) -> "Jet":
        """Truncate to the m-jet at 0 (Taylor coefficients up to ``order``)."""
        return Jet(order, tuple(self.coeff(n) for n in range(order + 1)))

    def shift(self, r: int) -> "Poly":
        """Multiply by x**r."""
        if self.is_zero:
            return ZERO
        return Poly((Fraction(0),) * r + self.coeffs)

    def hadamard_split(self, r: int) -> tuple["Poly", "Poly"]:
        """Split as head + x**r * tail with deg(head) < r; always exact."""
        if r < 1:
            raise ValueError("split order must be positive")
        head = Poly(_trim(self.coeffs[:r]))
        tail = Poly(self.coeffs[r:])
        return head, tail

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact quotient self / divisor; nonzero remainders are an error."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return ZERO
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        qlen = len(rem) - len(d) + 1
        quot = [Fraction(0)] * max(qlen, 0)
        for i in range(qlen - 1, -1, -1):
            q = rem[i + len(d) - 1] / lead
            quot[i] = q
            if q:
                for j, c in enumerate(d):
                    rem[i + j] -= q * c
        remainder = Poly(_trim(rem))
        if not remainder.is_zero:
            raise ExactDivisionError(remainder)
        return Poly(_trim(quot))

    def order_of_zero(self):
        """Index of the first nonzero coefficient (inf for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Poly({poly_str(self)})"


ZERO = Poly(())
ONE = Poly((Fraction(1),))
X = Poly((Fraction(0), Fraction(1)))


def poly_arith(p: Poly, q: Poly, kind: str) -> Poly:
    """Dispatch form of +, -, * used by the CLI layer."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def _coeff_str(c: Fraction) -> str:
    return str(c)


def poly_str(p: Poly, var: str = "x") -> str:
    """Render in the DSL syntax, e.g. ``3/2*x^2 - x + 1``."""
    if p.is_zero:
        return "0"
    parts = []
    for n in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[n]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if n == 0:
            body = _coeff_str(mag)
        else:
            xpow = var if n == 1 else f"{var}^{n}"
            body = xpow if mag == 1 else f"{_coeff_str(mag)}*{xpow}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class Jet:
    """m-jet at 0: Taylor coefficients c_0..c_m with c_n = f^(n)(0)/n!."""

    order: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.order + 1:
            raise ValueError("jet must carry exactly order+1 coefficients")

    @staticmethod
    def basis(order: int, n: int) -> "Jet":
        """The class of x**n in the truncated ring (eps**n)."""
        return Jet(order, tuple(Fraction(1 if i == n else 0) for i in range(order + 1)))

    def __add__(self, other: "Jet") -> "Jet":
        self._check(other)
        return Jet(self.order, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "Jet") -> "Jet":
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.values):
            if a:
                for j, b in enumerate(other.values):
                    if i + j <= self.order:
                        out[i + j] += a * b
        return Jet(self.order, tuple(out))

    def _check(self, other: "Jet") -> None:
        if self.order != other.order:
            raise ValueError("jet orders differ")


def jet_project(p: Poly, order: int) -> Jet:
    return p.jet(order)


@dataclass(frozen=True)
class Poly2:
    """Bivariate polynomial, stored as y-slices: ``slices[j]`` is the
    coefficient (a univariate Poly in x) of y**j.  Trailing zero slices are
    trimmed, so the grid representation has no all-zero top rows."""

    slices: tuple[Poly, ...]

    @staticmethod
    def of(*slices: Poly) -> "Poly2":
        xs = list(slices)
        while xs and xs[-1].is_zero:
            xs.pop()
        return Poly2(tuple(xs))

    @property
    def is_zero(self) -> bool:
        return not self.slices

    def coeff(self, i: int, j: int) -> Fraction:
        """Coefficient of x**i y**j."""
        if 0 <= j < len(self.slices):
            return self.slices[j].coeff(i)
        return Fraction(0)

    def at_y_zero(self) -> Poly:
        return self.slices[0] if self.slices else ZERO

    def substitute_y(self, h: Poly) -> Poly:
        """Evaluate F(x, h(x)) exactly."""
        result = ZERO
        for s in reversed(self.slices):
            result = result * h + s
        return result

    def __call__(self, x_value, y_value) -> Fraction:
        x_value, y_value = frac(x_value), frac(y_value)
        value = Fraction(0)
        for s in reversed(self.slices):
            value = value * y_value + s(x_value)
        return value

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.slices == other.slices

    def __hash__(self):
        return hash(self.slices)

    def __str__(self) -> str:
        return poly2_str(self)


def poly2_str(F: Poly2) -> str:
    """Render as a sum of c*x^i*y^j terms."""
    if F.is_zero:
        return "0"
    parts = []
    for j, s in enumerate(F.slices):
        for i in range(len(s.coeffs)):
            c = s.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = []
            if mag != 1 or (i == 0 and j == 0):
                factors.append(_coeff_str(mag))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            body = "*".join(factors)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
    return " ".join(parts)
