import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadberk import (
    DegenerateMultipliersError,
    InternalInvariantError,
    Lift,
    SigmaInvariants,
    conjugate,
    distinct_fixed_lift,
    fixed_point_poly,
    lambda3_from,
    multiple_fixed_lift,
    sigma_invariants,
)
from _support import esf3, rand_lift, rand_mobius

Z_SQUARED = Lift(1, 0, 0, 0, 0, 1)


def test_fixed_point_poly_squaring_map():
    poly = fixed_point_poly(Z_SQUARED)
    assert poly.coefficients() == (0, 1, -1, 0)  # z^2 - z, roots {0, 1}
    assert poly.degree == 2  # infinity fixed: degree drop from 3
    assert poly(0) == poly(1) == 0


def test_fixed_point_poly_distinct_form():
    # oracle: direct expansion; fixed points {0, (l1-1)/(l2-1)} plus infinity
    l1, l2 = Fraction(1, 3), Fraction(2)
    poly = fixed_point_poly(distinct_fixed_lift(l1, l2))
    assert poly.coefficients() == (0, -1, Fraction(-2, 3), 0)
    alpha3 = (l1 - 1) / (l2 - 1)
    assert alpha3 == Fraction(-2, 3)
    assert poly(0) == 0 and poly(alpha3) == 0


def test_fixed_point_poly_multiple_form():
    poly = fixed_point_poly(multiple_fixed_lift(Fraction(1, 5)))
    assert poly.coefficients() == (0, 0, Fraction(1, 5), 1)
    assert poly.degree == 1  # double fixed point at infinity


def test_sigma_squaring_map():
    # multipliers {0, 0, 2} at fixed points {0, infinity, 1}
    assert sigma_invariants(Z_SQUARED).as_tuple() == (2, 0, 0)


def test_sigma_distinct_form():
    # oracle: symmetric functions of (1/3, 2, -1)
    sig = sigma_invariants(distinct_fixed_lift(Fraction(1, 3), 2))
    assert sig.as_tuple() == esf3(Fraction(1, 3), 2, -1)
    assert sig.as_tuple() == (Fraction(4, 3), Fraction(-5, 3), Fraction(-2, 3))


def test_sigma_multiple_form():
    # multipliers (1, 1, 24/25) since s = 1/5 means lambda3 = 1 - 1/25
    sig = sigma_invariants(multiple_fixed_lift(Fraction(1, 5)))
    assert sig.as_tuple() == esf3(1, 1, Fraction(24, 25))
    assert sig.as_tuple() == (Fraction(74, 25), Fraction(73, 25), Fraction(24, 25))


def test_lambda3_examples():
    assert lambda3_from(Fraction(1, 3), 2) == -1
    assert lambda3_from(0, 0) == 2
    with pytest.raises(DegenerateMultipliersError):
        lambda3_from(2, Fraction(1, 2))


def test_sigma_type_enforces_relation():
    with pytest.raises(InternalInvariantError):
        SigmaInvariants(2, 0, 1)


def test_sigma_conjugation_invariance_seeded():
    rng = random.Random(21)
    for _ in range(150):
        L = rand_lift(rng)
        g = rand_mobius(rng)
        assert sigma_invariants(conjugate(L, g)) == sigma_invariants(L)


def test_sigma3_relation_on_random_lifts():
    rng = random.Random(22)
    for _ in range(200):
        sig = sigma_invariants(rand_lift(rng))
        assert sig.sigma3 == sig.sigma1 - 2


small_rat = st.fractions(min_value=-30, max_value=30, max_denominator=20)


@given(small_rat, small_rat)
@settings(max_examples=300)
def test_sigma_oracle_on_normal_form(l1, l2):
    if l1 * l2 == 1:
        return
    l3 = lambda3_from(l1, l2)
    sig = sigma_invariants(distinct_fixed_lift(l1, l2))
    assert sig.as_tuple() == esf3(l1, l2, l3)
    # each multiplier is an exact root of the multiplier cubic
    cubic = sig.multiplier_cubic()
    for lam in (l1, l2, l3):
        value = sum(c * lam ** (3 - i) for i, c in enumerate(cubic))
        assert value == 0


@given(small_rat)
@settings(max_examples=150)
def test_sigma_oracle_on_multiple_form(s):
    lam3 = 1 - s * s
    sig = sigma_invariants(multiple_fixed_lift(s))
    assert sig.as_tuple() == esf3(1, 1, lam3)
