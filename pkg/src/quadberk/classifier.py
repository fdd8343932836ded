"""Reduction-type strata W1-W4 from the sigma invariants.

The point [sigma1 : sigma2 : 1] in P^2, specialized to the residue field,
lands in exactly one of four regions, and the region determines the
reduction type of the map at its minimal-resultant point:

  W1  affine point              potential good reduction
  W2  [1 : x : 0], x != 2       potential multiplicative reduction
  W3  [1 : 2 : 0]               potential additive reduction
  W4  [0 : 1 : 0]               potential constant reduction

The W2 payload x equals lam + 1/lam for the residue lam of an indifferent
multiplier.  Valuations of the (possibly irrational) multipliers themselves
are read off the Newton polygon of T^3 - sigma1*T^2 + sigma2*T - sigma3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import QuadberkError
from .invariants import SigmaInvariants
from .padic import INF, PrimeCtx, ResidueElem, newton_slopes, reduce_residue, vp

W1, W2, W3, W4 = "W1", "W2", "W3", "W4"


@dataclass(frozen=True)
class ReductionType:
    """One of the four strata; W2 carries the payload x (never 2 mod p)."""

    tag: str
    x_tilde: ResidueElem | None = None

    def __post_init__(self):
        if self.tag not in (W1, W2, W3, W4):
            raise QuadberkError(f"unknown stratum tag {self.tag!r}")
        if (self.tag == W2) != (self.x_tilde is not None):
            raise QuadberkError("x_tilde is carried exactly by W2")
        if self.tag == W2 and self.x_tilde == 2:
            raise QuadberkError("W2 payload cannot equal 2 (that point is W3)")

    def __repr__(self) -> str:
        if self.tag == W2:
            return f"W2(x_tilde={self.x_tilde.value} mod {self.x_tilde.ctx.p})"
        return self.tag


@dataclass(frozen=True)
class ProjectivePointFp:
    """Point of P^2(F_p), normalized so the first nonzero coordinate is 1."""

    x: ResidueElem
    y: ResidueElem
    z: ResidueElem

    @classmethod
    def from_triple(cls, x: ResidueElem, y: ResidueElem, z: ResidueElem) -> "ProjectivePointFp":
        for lead in (x, y, z):
            if lead != 0:
                inv = lead.inverse()
                return cls(x * inv, y * inv, z * inv)
        raise QuadberkError("projective point cannot be (0, 0, 0)")

    def coordinates(self) -> tuple:
        return (self.x.value, self.y.value, self.z.value)


def specialize(sigma: SigmaInvariants, ctx: PrimeCtx) -> ProjectivePointFp:
    """Specialization of [sigma1 : sigma2 : 1] to P^2(F_p).

    Scales the triple by p^(-mu) with mu = min(vp(sigma1), vp(sigma2), 0),
    which makes every coordinate integral and some coordinate a unit, then
    reduces mod p.
    """
    mu = min(vp(sigma.sigma1, ctx), vp(sigma.sigma2, ctx), 0)
    factor = Fraction(ctx.p) ** (-mu)
    return ProjectivePointFp.from_triple(
        reduce_residue(sigma.sigma1 * factor, ctx),
        reduce_residue(sigma.sigma2 * factor, ctx),
        reduce_residue(factor, ctx),
    )


def stratum(sigma: SigmaInvariants, ctx: PrimeCtx) -> ReductionType:
    """The stratum of the map with the given sigma invariants."""
    point = specialize(sigma, ctx)
    if point.z != 0:
        return ReductionType(W1)
    if point.x != 0:
        # normalized so x = 1; the boundary coordinate is y = sigma2/sigma1
        x_tilde = point.y
        if x_tilde == 2:
            return ReductionType(W3)
        return ReductionType(W2, x_tilde)
    return ReductionType(W4)


def multiplier_valuations(sigma: SigmaInvariants, ctx: PrimeCtx) -> tuple:
    """Valuations of the three fixed-point multipliers, sorted ascending.

    Read off as negated Newton slopes of the multiplier cubic; zero
    multipliers (vanishing sigma3) are stripped first and reported as INF.
    """
    coeffs = list(sigma.multiplier_cubic())
    zeros = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1
    vals = []
    if len(coeffs) > 1:
        vals = list(newton_slopes(coeffs, ctx).root_valuations())
    return tuple(sorted(vals + [INF] * zeros))


def hsia_check(sigma: SigmaInvariants, ctx: PrimeCtx) -> bool:
    """True iff (stratum != W1) implies a negative multiplier valuation.

    A map away from W1 must have a classical repelling fixed point; were
    all fixed points non-repelling, the sigmas would be integral and the
    specialization would land in the affine chart.
    """
    if stratum(sigma, ctx).tag == W1:
        return True
    return any(v < 0 for v in multiplier_valuations(sigma, ctx))
