import random
from fractions import Fraction

import pytest
from quadberk import (
    Lift,
    NonIntegralRadiusError,
    PrimeCtx,
    ResidueKind,
    ResidueMap,
    TypeIIPoint,
    classify_residue,
    distinct_fixed_lift,
    gauss_point,
    ord_res_at,
    reduce_at,
    reduce_residue,
)
from _support import rand_lift, rand_rat, rand_unit

P3, P5 = PrimeCtx(3), PrimeCtx(5)


def test_reduce_at_good_reduction():
    residue = reduce_at(Lift(1, 0, 0, 0, 0, 1), gauss_point(), P5)
    assert residue.degree == 2
    assert residue.ftilde == (1, 0, 0) and residue.gtilde == (0, 0, 1)
    assert classify_residue(residue).kind is ResidueKind.REPELLING


def test_reduce_at_additive_case():
    # residue pair (z^2 + z)/z, i.e. z + 1 after removing the common factor
    L = Lift(1, Fraction(1, 5), 1, 0, 1, 0)
    residue = reduce_at(L, TypeIIPoint(0, -1), P5)
    assert residue.degree == 1
    assert residue.ftilde == (1, 1) and residue.gtilde == (0, 1)
    assert classify_residue(residue).kind is ResidueKind.ADDITIVE


def test_reduce_at_multiplicative_case():
    # residue pair (z^2 + z)/(2z), i.e. (z + 1)/2
    L = distinct_fixed_lift(Fraction(1, 3), 2)
    residue = reduce_at(L, TypeIIPoint(0, -1), P3)
    assert residue.degree == 1
    assert residue.ftilde == (1, 1) and residue.gtilde == (0, 2)
    rc = classify_residue(residue)
    assert rc.kind is ResidueKind.MULTIPLICATIVE
    assert rc.x_tilde == 1


def test_reduce_at_moved_case():
    L = distinct_fixed_lift(Fraction(1, 9), 3)
    residue = reduce_at(L, TypeIIPoint(0, -2), P3)
    assert residue.degree == 0
    assert residue.ftilde == (1,) and residue.gtilde == (0,)  # constant infinity
    assert classify_residue(residue).kind is ResidueKind.MOVED


def test_reduce_at_rejects_half_integer():
    with pytest.raises(NonIntegralRadiusError):
        reduce_at(Lift(1, 0, 0, 0, 0, 1), TypeIIPoint(0, Fraction(1, 2)), P5)


def _eigenvalues_mod_p(matrix, p):
    """Brute-force eigenvalues of a 2x2 matrix over F_p (None if outside F_p)."""
    (a, b), (c, d) = matrix
    found = [
        lam for lam in range(p)
        if ((a - lam) * (d - lam) - b * c) % p == 0
    ]
    return found


def test_classify_multiplicative_matrix():
    # the map (z+1)/2 over F_3: matrix [[1,1],[0,2]]
    residue = ResidueMap((1, 1), (0, 2), P3)
    rc = classify_residue(residue)
    assert rc.kind is ResidueKind.MULTIPLICATIVE
    # oracle: eigenvalues 1 and 2, ratio c = 2, x = c + 1/c = 2 + 2 = 4 = 1
    eigs = _eigenvalues_mod_p(((1, 1), (0, 2)), 3)
    assert sorted(eigs) == [1, 2]
    c = eigs[1] * pow(eigs[0], -1, 3) % 3
    assert rc.x_tilde == (c + pow(c, -1, 3)) % 3 == 1


def test_classify_additive_matrix():
    for p in (2, 3, 5, 7, 13):
        residue = ResidueMap((1, 1), (0, 1), PrimeCtx(p))
        assert classify_residue(residue).kind is ResidueKind.ADDITIVE


def test_classify_identity_matrix():
    for p in (3, 5):
        for c in range(1, p):
            residue = ResidueMap((c, 0), (0, c), PrimeCtx(p))
            assert classify_residue(residue).kind is ResidueKind.IDENTITY


def test_classify_scaling_invariance():
    rng = random.Random(41)
    for _ in range(200):
        p = rng.choice((3, 5, 7, 13))
        ctx = PrimeCtx(p)
        while True:
            a, b, c, d = (rng.randrange(p) for _ in range(4))
            if (a * d - b * c) % p != 0:
                break
        base = classify_residue(ResidueMap((a, b), (c, d), ctx))
        for u in range(1, p):
            scaled = ResidueMap(
                (a * u % p, b * u % p), (c * u % p, d * u % p), ctx
            )
            got = classify_residue(scaled)
            assert got.kind is base.kind and got.x_tilde == base.x_tilde


def test_good_reduction_iff_ord_res_zero():
    rng = random.Random(42)
    for _ in range(250):
        L = rand_lift(rng)
        ctx = PrimeCtx(rng.choice((2, 3, 5, 7, 13)))
        point = TypeIIPoint(rand_rat(rng, -4, 4, 3), rng.randint(-3, 3))
        degree = reduce_at(L, point, ctx).degree
        assert (degree == 2) == (ord_res_at(L, point, ctx) == 0)


def test_repelling_family_trichotomy():
    # |l1| > 1 >= |l2|: the class at radius |l1| follows the residue of l2
    rng = random.Random(43)
    for p in (2, 3, 5, 7, 13):
        ctx = PrimeCtx(p)
        for _ in range(120):
            e = rng.randint(1, 3)
            l1 = Fraction(p) ** (-e) * rand_unit(rng, p)
            style = rng.choice(("unit", "one", "zero"))
            if style == "unit":
                l2 = rand_unit(rng, p)
                if reduce_residue(l2, ctx) == 1:
                    continue
                expected = ResidueKind.MULTIPLICATIVE
            elif style == "one":
                l2 = 1 + Fraction(p) ** rng.randint(1, 2) * rand_unit(rng, p)
                expected = ResidueKind.ADDITIVE
            else:
                l2 = Fraction(p) ** rng.randint(1, 2) * rand_unit(rng, p)
                expected = ResidueKind.MOVED
            if style == "unit" and p == 2:
                continue
            L = distinct_fixed_lift(l1, l2)
            xi = TypeIIPoint(0, -e)
            assert classify_residue(reduce_at(L, xi, ctx)).kind is expected
