"""Exact p-adic arithmetic over the rationals.

All quantities are exact: rationals are `fractions.Fraction`, valuations are
integers (with ``INF`` standing in for the valuation of zero), and residue
field elements are integers mod p carrying their prime context.  The sign
convention is ord(x) = k where x = p^k * u for a p-unit u, so ord(1/p) = -1;
the corresponding absolute value is |x| = p^(-ord(x)), i.e. larger valuation
means p-adically smaller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NegativeValuationError, ZeroConstantError, ZeroLeadingError

#: Formal valuation of zero.  A float sentinel: it orders correctly against
#: any finite (integer or Fraction) valuation, which is all we need.
INF = math.inf

Rat = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeCtx:
    """A prime p, fixing the valuation on Q and the residue field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p = {self.p!r} is not a prime integer")

    def residue(self, value: int) -> "ResidueElem":
        return ResidueElem(value % self.p, self)

    def __repr__(self) -> str:
        return f"PrimeCtx({self.p})"


def _int_ord(n: int, p: int) -> int:
    # n != 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x: Rat, ctx: PrimeCtx):
    """p-adic order of a rational number.  Returns an int, or INF iff x == 0."""
    f = Fraction(x)
    if f == 0:
        return INF
    return _int_ord(f.numerator, ctx.p) - _int_ord(f.denominator, ctx.p)


@dataclass(frozen=True)
class ResidueElem:
    """An element of F_p, stored as its canonical representative in [0, p)."""

    value: int
    ctx: PrimeCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.p:
            object.__setattr__(self, "value", self.value % self.ctx.p)

    def _coerce(self, other) -> "ResidueElem":
        if isinstance(other, ResidueElem):
            if other.ctx.p != self.ctx.p:
                raise ValueError("mixed residue characteristics")
            return other
        if isinstance(other, int):
            return ResidueElem(other % self.ctx.p, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return ResidueElem((self.value + other.value) % self.ctx.p, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ResidueElem((self.value - other.value) % self.ctx.p, self.ctx)

    def __neg__(self):
        return ResidueElem(-self.value % self.ctx.p, self.ctx)

    def __mul__(self, other):
        other = self._coerce(other)
        return ResidueElem((self.value * other.value) % self.ctx.p, self.ctx)

    __rmul__ = __mul__

    def inverse(self) -> "ResidueElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.ctx.p}")
        return ResidueElem(pow(self.value, -1, self.ctx.p), self.ctx)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        if isinstance(other, ResidueElem):
            return self.ctx.p == other.ctx.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.p))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ctx.p})"


def reduce_residue(x: Rat, ctx: PrimeCtx) -> ResidueElem:
    """Reduce x mod p, i.e. numerator * denominator^(-1) in F_p.

    Requires vp(x) >= 0; a pole at p raises NegativeValuationError.
    """
    f = Fraction(x)
    if f != 0 and vp(f, ctx) < 0:
        raise NegativeValuationError(f"{f} has negative {ctx.p}-adic valuation")
    num = f.numerator % ctx.p
    den_inv = pow(f.denominator % ctx.p, -1, ctx.p)
    return ResidueElem(num * den_inv % ctx.p, ctx)


def residue_inverse(x: ResidueElem) -> ResidueElem:
    """Multiplicative inverse in F_p; raises ZeroDivisionError on 0."""
    return x.inverse()


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower-hull slopes of a polynomial, listed nondecreasing with
    multiplicity (one entry per root)."""

    slopes: tuple

    def root_valuations(self) -> tuple:
        """Valuations of the roots in an algebraic closure: the negated
        slopes, sorted ascending."""
        return tuple(sorted(-s for s in self.slopes))


def newton_slopes(coeffs: Sequence[Rat], ctx: PrimeCtx) -> NewtonPolygon:
    """Newton polygon of a polynomial given by coefficients leading-first.

    ``coeffs = [c_n, ..., c_1, c_0]`` describes c_n*T^n + ... + c_0.  Both
    c_n and c_0 must be nonzero: strip zero roots before calling.  The
    polygon is the lower convex hull of the points (i, vp(c_i)); a hull
    segment of slope s and horizontal length L yields L roots of valuation
    -s.
    """
    cs = [Fraction(c) for c in coeffs]
    if len(cs) < 2:
        raise ZeroLeadingError("polynomial must have degree >= 1")
    if cs[0] == 0:
        raise ZeroLeadingError("leading coefficient is zero")
    if cs[-1] == 0:
        raise ZeroConstantError("constant coefficient is zero; strip zero roots first")
    deg = len(cs) - 1
    points = sorted(
        (deg - idx, vp(c, ctx)) for idx, c in enumerate(cs) if c != 0
    )
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            x3, y3 = pt
            # pop the middle point unless the turn is strictly convex
            if (y2 - y1) * (x3 - x2) >= (y3 - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        slopes.extend([slope] * (x2 - x1))
    return NewtonPolygon(tuple(slopes))
