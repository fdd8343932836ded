"""Locating the minimal-resultant point xi and cross-checking every route.

For degree 2 there is a single point of the Berkovich line carrying weight:
the minimal-resultant locus xi.  Two normal forms cover all quadratic maps:

  * z + s + 1/z            (a multiple fixed point at infinity, s^2 = 1 - lambda3)
  * (z^2 + l1*z)/(l2*z + 1) (three distinct fixed points 0, infinity, alpha3)

and for each this module predicts xi, its stratum and its residue class in
closed form from the multiplier data.  An exact segment search over the
piecewise-affine ordRes profile provides the independent route, and
``verify_consistency`` asserts that prediction, sigma-specialization,
residue classification and profile minimization all agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classifier import W1, W2, W3, W4, ReductionType, stratum
from .errors import (
    ConsistencyFailure,
    DegenerateMultipliersError,
    NotNormalFormError,
    UnhandledResidueCaseError,
)
from .invariants import SigmaInvariants, lambda3_from, sigma_invariants
from .padic import PrimeCtx, Rat, reduce_residue, residue_inverse, vp
from .quadmap import (
    Lift,
    TypeIIPoint,
    minimize_profile,
    ord_res_profile,
)
from .reduction import ResidueClass, ResidueKind, classify_residue, reduce_at

#: stratum tag <-> residue kind dictated by the stratification
STRATUM_TO_RESIDUE = {
    W1: ResidueKind.REPELLING,
    W2: ResidueKind.MULTIPLICATIVE,
    W3: ResidueKind.ADDITIVE,
    W4: ResidueKind.MOVED,
}


def multiple_fixed_lift(s: Rat) -> Lift:
    """Lift of z + s + 1/z: [X^2 + s*XY + Y^2, XY]."""
    return Lift(1, Fraction(s), 1, 0, 1, 0)


def distinct_fixed_lift(lambda1: Rat, lambda2: Rat) -> Lift:
    """Lift of (z^2 + l1*z)/(l2*z + 1): [X^2 + l1*XY, l2*XY + Y^2]."""
    return Lift(1, Fraction(lambda1), 0, 0, Fraction(lambda2), 1)


@dataclass(frozen=True)
class CrucialReport:
    """Everything known about xi for one map.

    ``lift`` is the normal form the numbers refer to (the multiplier pair
    may have been reordered into the convention with the repelling
    multiplier first).  ``residue_class`` is None exactly when
    ``residue_unavailable`` explains why (half-integer radius exponent).
    """

    xi: TypeIIPoint
    stratum: ReductionType
    residue_class: ResidueClass | None
    residue_unavailable: str | None
    min_ord_res: Fraction
    lift: Lift


def _check_stratum_residue(strat: ReductionType, rc: ResidueClass, context: dict) -> None:
    expected = STRATUM_TO_RESIDUE[strat.tag]
    if rc.kind is not expected:
        raise ConsistencyFailure(
            f"stratum {strat.tag} expects residue kind {expected.value}, got {rc.kind.value}",
            context | {"stratum": strat, "residue_class": rc},
        )
    if strat.tag == W2 and strat.x_tilde != rc.x_tilde:
        raise ConsistencyFailure(
            "W2 payload disagrees with the multiplicative residue payload",
            context | {"stratum_payload": strat.x_tilde, "residue_payload": rc.x_tilde},
        )


def _complete_report(lift: Lift, xi: TypeIIPoint, strat: ReductionType, ctx: PrimeCtx) -> CrucialReport:
    profile = ord_res_profile(lift, xi.center, ctx)
    min_val = profile(xi.radius_exp)
    if xi.is_integral:
        rc = classify_residue(reduce_at(lift, xi, ctx))
        _check_stratum_residue(strat, rc, {"lift": lift, "xi": xi, "p": ctx.p})
        return CrucialReport(xi, strat, rc, None, min_val, lift)
    reason = "half-integer radius exponent: no rational conjugating matrix"
    return CrucialReport(xi, strat, None, reason, min_val, lift)


def predict_xi_multiple_fixed(s: Rat, ctx: PrimeCtx) -> CrucialReport:
    """Closed-form xi for z + s + 1/z, where lambda3 = 1 - s^2.

    Integral lambda3 gives good reduction at the Gauss point; a repelling
    lambda3 pushes xi out to radius sqrt|lambda3| with additive reduction.
    """
    s = Fraction(s)
    lam3 = 1 - s * s
    lift = multiple_fixed_lift(s)
    if vp(lam3, ctx) >= 0:
        xi = TypeIIPoint(0, 0)
        strat = ReductionType(W1)
    else:
        # vp(lam3) = 2 vp(s) < 0, so the radius exponent is an integer
        xi = TypeIIPoint(0, vp(s, ctx))
        strat = ReductionType(W3)
    return _complete_report(lift, xi, strat, ctx)


def _order_for_repelling(l1: Fraction, l2: Fraction, l3: Fraction, ctx: PrimeCtx) -> tuple:
    """Pick (repelling, tamest) deterministically: sort the multiplier
    triple by (valuation, value) and take the two ends."""
    ranked = sorted((l1, l2, l3), key=lambda lam: (vp(lam, ctx), lam))
    return ranked[0], ranked[-1]


def predict_xi_distinct_fixed(lambda1: Rat, lambda2: Rat, ctx: PrimeCtx) -> CrucialReport:
    """Closed-form xi for (z^2 + l1*z)/(l2*z + 1).

    Case tree on the multiplier triple (l1, l2, l3):

      * no repelling multiplier, l1*l2 - 1 a unit: xi is the Gauss point, W1;
      * no repelling multiplier, all three residues 1: xi is centered at -1
        with radius exponent vp(l1*l2 - 1)/2 (possibly a half-integer), W1;
      * a repelling multiplier exists: the pair is reordered so the
        repelling one comes first, xi sits at radius |l1| over center 0, and
        the residue of l2 decides W2 / W3 / W4 as it is a unit != 1 / 1 / 0.

    The remaining combination (no repelling, l1*l2 - 1 in the maximal
    ideal, residues not all 1) is outside the supported case tree for this
    parameter ordering; it raises UnhandledResidueCaseError rather than
    guess, and the caller can re-pair the multipliers so that the residue
    product is not 1.
    """
    l1, l2 = Fraction(lambda1), Fraction(lambda2)
    if l1 * l2 == 1:
        raise DegenerateMultipliersError("lambda1 * lambda2 = 1 is degenerate")
    l3 = lambda3_from(l1, l2)
    has_repelling = min(vp(l1, ctx), vp(l2, ctx), vp(l3, ctx)) < 0

    if has_repelling:
        rep, tame = _order_for_repelling(l1, l2, l3, ctx)
        lift = distinct_fixed_lift(rep, tame)
        xi = TypeIIPoint(0, vp(rep, ctx))
        tame_res = reduce_residue(tame, ctx)
        if tame_res == 0:
            strat = ReductionType(W4)
        elif tame_res == 1:
            strat = ReductionType(W3)
        else:
            strat = ReductionType(W2, tame_res + residue_inverse(tame_res))
        return _complete_report(lift, xi, strat, ctx)

    lift = distinct_fixed_lift(l1, l2)
    unit_gap = vp(l1 * l2 - 1, ctx)
    if unit_gap == 0:
        return _complete_report(lift, TypeIIPoint(0, 0), ReductionType(W1), ctx)
    if all(vp(lam - 1, ctx) > 0 for lam in (l1, l2, l3)):
        xi = TypeIIPoint(-1, Fraction(unit_gap, 2))
        return _complete_report(lift, xi, ReductionType(W1), ctx)
    raise UnhandledResidueCaseError(
        "no repelling multiplier, lambda1*lambda2 = 1 mod p, residues not all 1; "
        "reorder the multiplier pair so that its residue product is not 1"
    )


def find_crucial_on_segment(lift: Lift, center: Rat, ctx: PrimeCtx) -> tuple:
    """Exact (argmin, min value) of the ordRes profile along the segment of
    points centered at ``center``."""
    return minimize_profile(ord_res_profile(lift, center, ctx))


def identify_normal_form(lift: Lift):
    """Recognize the two supported normal forms up to projective scaling.

    Returns ("multiple", s), ("distinct", l1, l2), or None.
    """
    if lift.b0 == 0 and lift.b2 == 0 and lift.a0 == lift.b1 and lift.a2 == lift.b1:
        return ("multiple", lift.a1 / lift.a0)
    if lift.a2 == 0 and lift.b0 == 0 and lift.a0 == lift.b2:
        return ("distinct", lift.a1 / lift.a0, lift.b1 / lift.a0)
    return None


@dataclass(frozen=True)
class ConsistencyReport:
    """Successful end-to-end verification of one map."""

    consistent: bool
    xi: TypeIIPoint
    stratum: ReductionType
    residue_class: ResidueClass | None
    residue_unavailable: str | None
    min_ord_res: Fraction
    sigma: SigmaInvariants
    lift: Lift


def verify_consistency(lift: Lift, ctx: PrimeCtx, centers=None) -> ConsistencyReport:
    """Compute xi by every available route and assert they agree.

    For a recognized normal form: the closed-form prediction, the stratum
    from the sigma specialization, the residue classification at xi, and
    the argmin of the exact profile must match (W1 <-> repelling,
    W2 <-> multiplicative with equal payloads, W3 <-> additive,
    W4 <-> moved).  For other maps a list of segment centers must be
    supplied; xi is then located by profile search and checked against the
    stratum.  Raises ConsistencyFailure with a diagnostic dump on any
    mismatch; that error firing on valid input means an implementation bug.
    """
    sigma = sigma_invariants(lift)
    strat_sigma = stratum(sigma, ctx)
    form = identify_normal_form(lift)
    if form is not None:
        if form[0] == "multiple":
            report = predict_xi_multiple_fixed(form[1], ctx)
        else:
            report = predict_xi_distinct_fixed(form[1], form[2], ctx)
        context = {"lift": lift, "p": ctx.p, "sigma": sigma.as_tuple()}
        if (strat_sigma.tag, strat_sigma.x_tilde) != (report.stratum.tag, report.stratum.x_tilde):
            raise ConsistencyFailure(
                f"sigma specialization gives {strat_sigma}, prediction gives {report.stratum}",
                context,
            )
        argmin, min_val = find_crucial_on_segment(report.lift, report.xi.center, ctx)
        if not isinstance(argmin, Fraction):
            raise ConsistencyFailure(
                "profile minimizer is an interval for a normal form", context | {"argmin": argmin}
            )
        if argmin != report.xi.radius_exp or min_val != report.min_ord_res:
            raise ConsistencyFailure(
                f"profile argmin ({argmin}, {min_val}) differs from predicted xi "
                f"({report.xi.radius_exp}, {report.min_ord_res})",
                context,
            )
        return ConsistencyReport(
            True,
            report.xi,
            strat_sigma,
            report.residue_class,
            report.residue_unavailable,
            report.min_ord_res,
            sigma,
            report.lift,
        )

    if not centers:
        raise NotNormalFormError(
            "lift is not in a recognized normal form; supply segment centers spanning "
            "the fixed-point tree"
        )
    best = None
    for center in centers:
        argmin, min_val = find_crucial_on_segment(lift, center, ctx)
        if best is None or min_val < best[2]:
            best = (Fraction(center), argmin, min_val)
    center, argmin, min_val = best
    context = {"lift": lift, "p": ctx.p, "centers": list(centers)}
    if not isinstance(argmin, Fraction):
        raise ConsistencyFailure(
            "profile minimizer is an interval (degenerate center choice)",
            context | {"center": center, "argmin": argmin},
        )
    xi = TypeIIPoint(center, argmin)
    if xi.is_integral:
        rc = classify_residue(reduce_at(lift, xi, ctx))
        _check_stratum_residue(strat_sigma, rc, context | {"xi": xi})
        return ConsistencyReport(True, xi, strat_sigma, rc, None, min_val, sigma, lift)
    reason = "half-integer radius exponent: no rational conjugating matrix"
    return ConsistencyReport(True, xi, strat_sigma, None, reason, min_val, sigma, lift)
