import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sphladder.scalar import (
    INV_SQRT_PI,
    ONE,
    ZERO,
    NegativeRadicand,
    PiExponentMismatch,
    Scalar,
    SquarefreeBoundError,
    scalar_is_zero,
    scalar_sqrt,
    scalar_to_float,
    squarefree_split,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
radicals = st.builds(lambda r, q: Scalar([(r, q)]), st.integers(1, 999), fractions)
sums = st.lists(radicals, min_size=0, max_size=6).map(lambda xs: sum(xs, ZERO))


def sqrt_int(n):
    return Scalar([(n, 1)])


def test_like_terms_combine():
    half_root3 = Scalar([(3, Fraction(1, 2))])
    assert half_root3 + half_root3 == sqrt_int(3)


def test_rational_coefficients_add_under_pi():
    a = Scalar([(2, Fraction(1, 2))], pi_exponent=-1)
    b = Scalar([(2, Fraction(1, 3))], pi_exponent=-1)
    assert a + b == Scalar([(2, Fraction(5, 6))], pi_exponent=-1)


@given(sums)
def test_additive_identity(x):
    assert x + ZERO == x
    assert ZERO + x == x


def test_products_collapse_radicals():
    assert sqrt_int(2) * sqrt_int(2) == 2
    assert sqrt_int(6) * sqrt_int(10) == Scalar([(15, 2)])
    q = Scalar.rational(Fraction(3, 7), pi_exponent=-1)
    r = Scalar.rational(Fraction(-2, 5), pi_exponent=-1)
    prod = q * r
    assert prod.pi_exponent == -2
    assert prod.terms == ((1, Fraction(-6, 35)),)


def test_squarefree_split_by_trial_division():
    assert squarefree_split(60) == (2, 15)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(2**4 * 3**3 * 7) == (12, 21)
    with pytest.raises(SquarefreeBoundError):
        squarefree_split(1000003 * 1000033, bound=1000)


def test_sqrt_examples():
    assert scalar_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    third = scalar_sqrt(Fraction(1, 3))
    assert third == Scalar([(3, Fraction(1, 3))])
    assert third * third == Fraction(1, 3)
    assert scalar_sqrt(0) == ZERO
    with pytest.raises(NegativeRadicand):
        scalar_sqrt(-1)
    with pytest.raises(NegativeRadicand):
        Scalar([(-3, 1)])


def test_zero_tests():
    assert scalar_is_zero(sqrt_int(2) - sqrt_int(2))
    assert scalar_is_zero(sqrt_int(2) - Scalar([(8, Fraction(1, 2))]))
    assert not scalar_is_zero(sqrt_int(2) - sqrt_int(3))


def test_float_bridge():
    assert scalar_to_float(Scalar.rational(Fraction(1, 2), pi_exponent=-1)) == pytest.approx(0.28209479177, abs=1e-11)
    assert scalar_to_float(ZERO) == 0.0
    assert scalar_to_float(sqrt_int(2)) == pytest.approx(1.41421356, abs=1e-8)


def test_mixed_pi_exponent_addition_raises():
    with pytest.raises(PiExponentMismatch):
        ONE + INV_SQRT_PI


def test_scalar_is_immutable():
    with pytest.raises(AttributeError):
        ONE.terms = ()


@given(sums, sums, sums)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4))
def test_sqrt_squares_back(q):
    r = scalar_sqrt(q)
    assert r * r == q


def test_sqrt_squares_back_200_seeded(rng):
    for _ in range(200):
        q = Fraction(rng.randrange(0, 10**5), rng.randrange(1, 10**4))
        r = scalar_sqrt(q)
        assert r * r == q


@given(sums)
def test_normalization_is_idempotent(x):
    again = Scalar(x.terms, x.pi_exponent)
    assert again.terms == x.terms
    assert again == x and hash(again) == hash(x)
    radicands = [r for r, _ in x.terms]
    assert radicands == sorted(set(radicands))
    assert all(q != 0 for _, q in x.terms)
    for r, _ in x.terms:
        assert squarefree_split(r) == (1, r)


@given(st.lists(st.tuples(st.sampled_from([1, 2, 3, 5, 6, 7]), st.integers(1, 9)), min_size=1, max_size=4, unique_by=lambda t: t[0]))
def test_zero_iff_float_near_zero(terms):
    # distinct squarefree radicands with positive coefficients are bounded away from zero
    x = Scalar(terms)
    assert not scalar_is_zero(x)
    assert abs(scalar_to_float(x)) >= 1e-9
    assert scalar_is_zero(x - x) and abs(scalar_to_float(x - x)) < 1e-9


@given(sums)
def test_float_matches_terms(x):
    expected = math.fsum(float(q) * math.sqrt(r) for r, q in x.terms)
    assert float(x) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_inverse_and_division():
    x = Scalar([(6, Fraction(2, 3))], pi_exponent=-1)
    assert x * x.inverse() == ONE
    assert (x / x) == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_str_forms():
    assert str(Scalar.rational(Fraction(1, 2), pi_exponent=-1)) == "1/2·π^(-1/2)"
    assert str(ZERO) == "0"
