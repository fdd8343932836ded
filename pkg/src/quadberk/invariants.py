"""Multiplier symmetric functions of a quadratic map, with no root extraction.

The three fixed points of a quadratic rational map carry multipliers
(lambda_1, lambda_2, lambda_3) that may be irrational even for a rational
map; their elementary symmetric functions (sigma_1, sigma_2, sigma_3) are
rational and are computed here exactly through a resultant construction.
The identity sigma_3 = sigma_1 - 2, a consequence of the rational
fixed-point residue formula sum 1/(1 - lambda_i) = 1, is enforced on the
result type and doubles as an internal cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polyutil
from .errors import DegenerateMultipliersError, InternalInvariantError
from .padic import Rat
from .quadmap import Lift, Mobius, conjugate


@dataclass(frozen=True)
class SigmaInvariants:
    """Elementary symmetric functions of the fixed-point multipliers."""

    sigma1: Fraction
    sigma2: Fraction
    sigma3: Fraction

    def __post_init__(self):
        for name in ("sigma1", "sigma2", "sigma3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.sigma3 != self.sigma1 - 2:
            raise InternalInvariantError(
                f"sigma3 = {self.sigma3} != sigma1 - 2 = {self.sigma1 - 2}"
            )

    @classmethod
    def from_multipliers(cls, l1: Rat, l2: Rat, l3: Rat) -> "SigmaInvariants":
        l1, l2, l3 = Fraction(l1), Fraction(l2), Fraction(l3)
        return cls(l1 + l2 + l3, l1 * l2 + l1 * l3 + l2 * l3, l1 * l2 * l3)

    def as_tuple(self) -> tuple:
        return (self.sigma1, self.sigma2, self.sigma3)

    def multiplier_cubic(self) -> list:
        """T^3 - sigma1*T^2 + sigma2*T - sigma3, coefficients leading-first."""
        return [Fraction(1), -self.sigma1, self.sigma2, -self.sigma3]


@dataclass(frozen=True)
class FixedPointPoly:
    """P(z) = F(z,1) - z*G(z,1), whose roots are the finite fixed points.

    Degree 3 exactly when infinity is not fixed; a degree drop records
    fixed points at infinity with multiplicity.
    """

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def coefficients(self) -> tuple:
        """Leading-first: (c3, c2, c1, c0)."""
        return (self.c3, self.c2, self.c1, self.c0)

    @property
    def degree(self) -> int:
        for d, c in zip((3, 2, 1, 0), self.coefficients()):
            if c != 0:
                return d
        return -1

    def __call__(self, z: Rat) -> Fraction:
        z = Fraction(z)
        return ((self.c3 * z + self.c2) * z + self.c1) * z + self.c0


def fixed_point_poly(lift: Lift) -> FixedPointPoly:
    """Fixed-point polynomial of the lift: -b0*z^3 + (a0-b1)*z^2 + (a1-b2)*z + a2."""
    return FixedPointPoly(
        -lift.b0, lift.a0 - lift.b1, lift.a1 - lift.b2, lift.a2
    )


def lambda3_from(lambda1: Rat, lambda2: Rat) -> Fraction:
    """Third multiplier of a map with three distinct fixed points:
    (lambda1 + lambda2 - 2)/(lambda1*lambda2 - 1)."""
    l1, l2 = Fraction(lambda1), Fraction(lambda2)
    if l1 * l2 == 1:
        raise DegenerateMultipliersError(
            "lambda1 * lambda2 = 1: the associated map is degenerate"
        )
    return (l1 + l2 - 2) / (l1 * l2 - 1)


def _sigma_from_finite_fixed(lift: Lift) -> SigmaInvariants | None:
    """sigma invariants when all fixed points are finite (b0 != 0).

    With P the cubic fixed-point polynomial, A(z) = f'(z) - z*g'(z) and
    B(z) = g(z), the multiplier at a fixed root alpha is A(alpha)/B(alpha);
    M(T) = Res_z(P, A - T*B) is then proportional to the cubic with the
    multipliers as roots.  M is recovered by interpolation from four
    resultant evaluations.  Returns None on a degree drop in T (signals the
    caller to retry with another conjugate).
    """
    a0, a1, a2 = lift.f_coeffs
    b0, b1, b2 = lift.g_coeffs
    # low-to-high coefficient lists
    p_fix = polyutil.trim([a2, a1 - b2, a0 - b1, -b0])
    a_poly = polyutil.trim([a1, 2 * a0 - b1, -2 * b0])
    b_poly = polyutil.trim([b2, b1, b0])
    points = []
    for t in (0, 1, 2, 3):
        q_t = polyutil.sub(a_poly, polyutil.scale(b_poly, t))
        points.append((Fraction(t), polyutil.resultant(p_fix, q_t, 3, 2)))
    m_poly = polyutil.lagrange_interpolate(points)
    if polyutil.degree(m_poly) != 3:
        return None
    lead = m_poly[3]
    try:
        return SigmaInvariants(-m_poly[2] / lead, m_poly[1] / lead, -m_poly[0] / lead)
    except InternalInvariantError:
        return None


def _deterministic_shift(lift: Lift, start: int) -> tuple:
    """Conjugate by z -> c + 1/z for the smallest c >= start that is not a
    fixed point, so that infinity is no longer fixed.  Returns (conjugate, c)."""
    poly = fixed_point_poly(lift)
    c = start
    while poly(c) == 0:
        c += 1
    return conjugate(lift, Mobius(c, 1, 1, 0)), c


def sigma_invariants(lift: Lift) -> SigmaInvariants:
    """Exact (sigma_1, sigma_2, sigma_3) of the map, conjugation-invariant.

    If infinity is a fixed point (b0 = 0), the map is first conjugated by a
    deterministic coordinate change moving all fixed points into the affine
    line; the sigmas are unchanged by conjugation.  A second deterministic
    conjugate is tried if the resultant construction degenerates; if both
    routes fail or disagree an InternalInvariantError is raised rather than
    guessing.
    """
    if lift.b0 != 0:
        primary = lift
        retry_start = 0
    else:
        primary, c = _deterministic_shift(lift, 0)
        retry_start = c + 1
    sig = _sigma_from_finite_fixed(primary)
    if sig is not None:
        return sig
    fallback, _ = _deterministic_shift(lift, retry_start)
    sig = _sigma_from_finite_fixed(fallback)
    if sig is None:
        raise InternalInvariantError(
            f"sigma computation degenerated on both conjugates of {lift}"
        )
    return sig
