"""Quadratic rational maps as homogeneous lifts, and the ordRes function.

A map phi = F/G of degree 2 is stored as the six rational coefficients of a
homogeneous lift [F, G] with F = a0*X^2 + a1*X*Y + a2*Y^2 and
G = b0*X^2 + b1*X*Y + b2*Y^2.  Nondegeneracy (Sylvester resultant nonzero)
is enforced at construction.

Type II points of the projective Berkovich line are written in the affine
chart as a center a in Q together with a radius exponent m, standing for the
sup-norm point of the disc D(a, p^(-m)); the Gauss point is a = 0, m = 0.
Points "beyond infinity" are reached by first conjugating the map by
z -> 1/z.  Moving the Gauss point to (a, m) uses gamma(z) = a + p^m * z,
which is defined over Q exactly when m is an integer; the piecewise-affine
profile of ordRes along a segment carries the same information for all
rational m, half-integers included.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateMapError,
    InternalInvariantError,
    NonIntegralRadiusError,
    SingularMatrixError,
    UnboundedProfileError,
)
from .padic import PrimeCtx, Rat, vp
from .polyutil import exact_det


def resultant_forms(f: tuple, g: tuple) -> Fraction:
    """Sylvester resultant of two binary quadratic forms (raw, total).

    Zero output signals a common projective factor; Lift construction
    rejects that case, but the raw operation accepts any coefficients.
    """
    a0, a1, a2 = (Fraction(c) for c in f)
    b0, b1, b2 = (Fraction(c) for c in g)
    rows = [
        [a0, a1, a2, 0],
        [0, a0, a1, a2],
        [b0, b1, b2, 0],
        [0, b0, b1, b2],
    ]
    return exact_det(rows)


@dataclass(frozen=True)
class Lift:
    """Homogeneous degree-2 lift [F, G] of a quadratic rational map."""

    a0: Fraction
    a1: Fraction
    a2: Fraction
    b0: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "b0", "b1", "b2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if resultant_forms(self.f_coeffs, self.g_coeffs) == 0:
            raise DegenerateMapError(
                f"lift {self.coeffs} has resultant 0 (degenerate map)"
            )

    @property
    def f_coeffs(self) -> tuple:
        return (self.a0, self.a1, self.a2)

    @property
    def g_coeffs(self) -> tuple:
        return (self.b0, self.b1, self.b2)

    @property
    def coeffs(self) -> tuple:
        return self.f_coeffs + self.g_coeffs

    def scaled(self, c: Rat) -> "Lift":
        c = Fraction(c)
        if c == 0:
            raise ValueError("cannot scale a lift by zero")
        return Lift(*(x * c for x in self.coeffs))

    def proportional_to(self, other: "Lift") -> bool:
        """Projective equality, tested by cross-multiplication."""
        u, w = self.coeffs, other.coeffs
        return all(
            u[i] * w[j] == u[j] * w[i]
            for i in range(6)
            for j in range(i + 1, 6)
        )

    def __repr__(self) -> str:
        return f"Lift(F=({self.a0}, {self.a1}, {self.a2}), G=({self.b0}, {self.b1}, {self.b2}))"


@dataclass(frozen=True)
class Mobius:
    """Invertible matrix (A B; C D) acting as z -> (Az + B)/(Cz + D)."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction

    def __post_init__(self):
        for name in ("A", "B", "C", "D"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise SingularMatrixError(f"matrix {self} has determinant 0")

    @property
    def det(self) -> Fraction:
        return self.A * self.D - self.B * self.C

    def inverse(self) -> "Mobius":
        return Mobius(self.D, -self.B, -self.C, self.A)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, scale_by: Rat, shift: Rat) -> "Mobius":
        """z -> scale_by * z + shift."""
        return cls(scale_by, shift, 0, 1)


@dataclass(frozen=True)
class TypeIIPoint:
    """The point zeta_{D(center, p^(-radius_exp))} in the affine chart."""

    center: Fraction
    radius_exp: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "radius_exp", Fraction(self.radius_exp))

    @property
    def is_integral(self) -> bool:
        return self.radius_exp.denominator == 1

    def __repr__(self) -> str:
        return f"TypeIIPoint(center={self.center}, radius_exp={self.radius_exp})"


def gauss_point() -> TypeIIPoint:
    return TypeIIPoint(0, 0)


def resultant(lift: Lift) -> Fraction:
    """Sylvester resultant of the lift (4x4 determinant)."""
    return resultant_forms(lift.f_coeffs, lift.g_coeffs)


def normalize(lift: Lift, ctx: PrimeCtx) -> tuple:
    """Scale the lift by p^(-mu), mu = min coefficient valuation.

    Returns (scaled lift, mu); the scaled lift has min(ord F, ord G) = 0.
    """
    mu = min(vp(c, ctx) for c in lift.coeffs if c != 0)
    if mu == 0:
        return lift, 0
    return lift.scaled(Fraction(ctx.p) ** (-mu)), mu


def conjugate(lift: Lift, g: Mobius) -> Lift:
    """The lift [F^g, G^g] of the conjugate g^(-1) . phi . g.

    F^g(X,Y) = D*F(AX+BY, CX+DY) - B*G(AX+BY, CX+DY) and
    G^g(X,Y) = -C*F(AX+BY, CX+DY) + A*G(AX+BY, CX+DY); no normalization
    is applied.
    """
    A, B, C, D = g.A, g.B, g.C, g.D

    def compose(c0, c1, c2):
        # coefficients of c0*U^2 + c1*U*V + c2*V^2 with U = AX+BY, V = CX+DY
        return (
            c0 * A * A + c1 * A * C + c2 * C * C,
            2 * c0 * A * B + c1 * (A * D + B * C) + 2 * c2 * C * D,
            c0 * B * B + c1 * B * D + c2 * D * D,
        )

    fc = compose(*lift.f_coeffs)
    gc = compose(*lift.g_coeffs)
    new_f = tuple(D * fc[i] - B * gc[i] for i in range(3))
    new_g = tuple(-C * fc[i] + A * gc[i] for i in range(3))
    return Lift(*new_f, *new_g)


@dataclass(frozen=True)
class PLFunction:
    """Convex piecewise-affine function of one rational variable.

    Piece i is m -> slopes[i]*m + intercepts[i], valid between
    breakpoints[i-1] and breakpoints[i]; slopes are strictly increasing and
    adjacent pieces agree at their shared breakpoint.
    """

    slopes: tuple
    intercepts: tuple
    breakpoints: tuple

    def __post_init__(self):
        if len(self.slopes) != len(self.intercepts):
            raise ValueError("slopes/intercepts length mismatch")
        if len(self.breakpoints) != len(self.slopes) - 1:
            raise ValueError("breakpoint count must be piece count - 1")
        if any(s1 >= s2 for s1, s2 in zip(self.slopes, self.slopes[1:])):
            raise ValueError("slopes must be strictly increasing (convexity)")
        if any(b1 >= b2 for b1, b2 in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        for i, b in enumerate(self.breakpoints):
            left = self.slopes[i] * b + self.intercepts[i]
            right = self.slopes[i + 1] * b + self.intercepts[i + 1]
            if left != right:
                raise ValueError("pieces do not meet at a breakpoint")

    @classmethod
    def upper_envelope(cls, lines) -> "PLFunction":
        """Pointwise maximum of affine functions given as (slope, intercept)."""
        best = {}
        for k, b in lines:
            k, b = Fraction(k), Fraction(b)
            if k not in best or b > best[k]:
                best[k] = b
        items = sorted(best.items())
        if not items:
            raise ValueError("empty set of affine functions")
        env = [items[0]]
        bps = []
        for k, b in items[1:]:
            while True:
                k0, b0 = env[-1]
                x = Fraction(b0 - b, k - k0)
                if bps and x <= bps[-1]:
                    env.pop()
                    bps.pop()
                    continue
                env.append((k, b))
                bps.append(x)
                break
        slopes, intercepts = zip(*env)
        return cls(tuple(slopes), tuple(intercepts), tuple(bps))

    def __call__(self, m: Rat) -> Fraction:
        m = Fraction(m)
        i = bisect_right(self.breakpoints, m)
        return self.slopes[i] * m + self.intercepts[i]


def minimize_profile(f: PLFunction) -> tuple:
    """Exact minimizer of a convex piecewise-affine function.

    Returns (argmin, min_value) where argmin is a Fraction, or a closed
    interval (lo, hi) when a zero-slope piece attains the minimum.  Raises
    UnboundedProfileError when the minimizing set is unbounded (all slopes
    of one sign, or a flat piece extending to infinity).
    """
    slopes = f.slopes
    if slopes[0] > 0 or slopes[-1] < 0:
        raise UnboundedProfileError("all slopes share a sign; no interior minimum")
    for i, s in enumerate(slopes):
        if s == 0:
            if i == 0 or i == len(slopes) - 1:
                raise UnboundedProfileError("flat piece extends to infinity")
            return (f.breakpoints[i - 1], f.breakpoints[i]), f.intercepts[i]
    j = next(i for i, s in enumerate(slopes) if s > 0)
    m = f.breakpoints[j - 1]
    return m, f(m)


def _coefficient_lines(lift: Lift, center: Rat) -> list:
    """(k, c) pairs: the i-th coefficient of the conjugate of the lift by
    z -> center + p^m z equals c * p^(k*m), so its valuation is
    vp(c) + k*m, affine in m."""
    a = Fraction(center)
    a0, a1, a2 = lift.f_coeffs
    b0, b1, b2 = lift.g_coeffs
    f_at = a0 * a * a + a1 * a + a2
    g_at = b0 * a * a + b1 * a + b2
    fprime = 2 * a0 * a + a1
    gprime = 2 * b0 * a + b1
    return [
        (2, a0 - a * b0),
        (1, fprime - a * gprime),
        (0, f_at - a * g_at),
        (3, b0),
        (2, gprime),
        (1, g_at),
    ]


def ord_res_at(lift: Lift, point: TypeIIPoint, ctx: PrimeCtx) -> int:
    """ordRes of the map at a type II point with integer radius exponent.

    Computed two ways - the Sylvester resultant of the normalized conjugate,
    and the transformation formula
    ordRes(zeta_G) + 6*ord(det gamma) - 4*min(ord F^gamma, ord G^gamma) -
    and checked for agreement.
    """
    if not point.is_integral:
        raise NonIntegralRadiusError(
            f"radius exponent {point.radius_exp} is not an integer"
        )
    m = int(point.radius_exp)
    gamma = Mobius.affine(Fraction(ctx.p) ** m, point.center)
    base, _ = normalize(lift, ctx)
    conj = conjugate(base, gamma)
    conj_norm, mu = normalize(conj, ctx)
    direct = vp(resultant(conj_norm), ctx)
    formula = vp(resultant(base), ctx) + 6 * m - 4 * mu
    if direct != formula:
        raise InternalInvariantError(
            f"ordRes routes disagree at {point}: direct {direct}, formula {formula}"
        )
    return direct


def ord_res_profile(lift: Lift, center: Rat, ctx: PrimeCtx) -> PLFunction:
    """Exact profile m -> ordRes at zeta_{D(center, p^(-m))}, all rational m.

    Through the transformation formula the profile is
    vp(Res) + 6m - 4*min_i(vp(c_i) + k_i*m), a pointwise maximum of at most
    four affine functions with slopes in {-6, -2, 2, 6}.
    """
    base = vp(resultant(lift), ctx)
    lines = []
    for k, c in _coefficient_lines(lift, center):
        if c != 0:
            lines.append((6 - 4 * k, base - 4 * vp(c, ctx)))
    return PLFunction.upper_envelope(lines)
