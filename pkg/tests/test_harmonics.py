import math
from fractions import Fraction

import numpy as np
import pytest

from sphladder import coefficients as co
from sphladder.harmonics import (
    HarmonicIndex,
    IndexOutOfRange,
    SubspaceKind,
    SubspaceLabel,
    closed_form,
    enumerate_subspace,
    extremal_I,
    extremal_Jfamily,
    extremal_K,
    extremal_su2,
    generate_via_I,
    generate_via_J,
    generate_via_K,
    generate_via_L,
    rodrigues,
)
from sphladder.inner import gram, project
from sphladder.operators import L_MINUS, make_J, make_K
from sphladder.oracle import ylm
from sphladder.scalar import INV_SQRT_PI, Scalar, scalar_sqrt
from sphladder.sphere import COS, SIN, NonSmoothResult, SphereFunction, ThetaForm, parity_reflect

ALL6 = [(l, m) for l in range(7) for m in range(-l, l + 1)]


def sqrt_over_pi(q):
    return scalar_sqrt(Fraction(q)) * INV_SQRT_PI


def test_closed_form_examples():
    assert closed_form(0, 0) == SphereFunction.single(0, ThetaForm.constant(Scalar.rational(Fraction(1, 2), -1)))
    assert closed_form(1, 1) == SphereFunction.single(1, SIN * -sqrt_over_pi(Fraction(3, 8)))
    # sqrt(Gamma(2l+2)) / (sqrt(pi) 2^{l+1} Gamma(l+1)) sin^l at l = 2
    const = sqrt_over_pi(120) * Fraction(1, 2**3 * 2)
    assert closed_form(2, -2) == SphereFunction.single(-2, ThetaForm.sin_power(2) * const)


@pytest.mark.parametrize("lm", ALL6)
def test_closed_form_matches_float_oracle(lm):
    l, m = lm
    rng = np.random.default_rng(l * 31 + m)
    theta, phi = rng.uniform(0, np.pi, 16), rng.uniform(0, 2 * np.pi, 16)
    np.testing.assert_allclose(closed_form(l, m)(theta, phi), ylm(l, m, theta, phi), atol=1e-12)


def test_closed_form_matches_scipy():
    special = pytest.importorskip("scipy.special")
    sph = getattr(special, "sph_harm_y", None)
    theta, phi = np.array([0.3, 1.1, 2.5]), np.array([0.2, 4.0, 5.5])
    for l in range(7):
        for m in range(-l, l + 1):
            ref = sph(l, m, theta, phi) if sph else special.sph_harm(m, l, phi, theta)
            np.testing.assert_allclose(closed_form(l, m)(theta, phi), ref, atol=1e-12)


def test_single_mode_equal_to_m():
    for l, m in ALL6:
        assert list(closed_form(l, m).modes) == [m]


def test_closed_form_rejects_bad_indices():
    for l, m in [(-1, 0), (1, 2), (2, -3)]:
        with pytest.raises(IndexOutOfRange):
            closed_form(l, m)
    with pytest.raises(IndexOutOfRange):
        HarmonicIndex(1, 5)


def test_closed_form_cache_has_value_semantics():
    a = closed_form(3, 1)
    b = a * 2
    assert closed_form(3, 1) == a and b != a


def test_seed_power_l_is_not_a_harmonic():
    # only a sin^{2l} seed yields Y_l^m; sin^l gives a constant mode or is not smooth
    for l in range(1, 5):
        assert rodrigues(l, 0, 2 * l) == closed_form(l, 0)
        assert rodrigues(l, l, l) != closed_form(l, l)
        assert all(form.even and not form.even[1:] for form in rodrigues(l, l, l).modes.values())
        if l % 2:
            with pytest.raises(NonSmoothResult):
                rodrigues(l, 0, l)
        else:
            assert rodrigues(l, 0, l) != closed_form(l, 0)


def test_extremal_su2():
    assert extremal_su2(0, "lowest") == closed_form(0, 0) == extremal_su2(0, "highest")
    assert extremal_su2(1, "lowest") == SphereFunction.single(-1, SIN * sqrt_over_pi(Fraction(3, 8)))
    assert L_MINUS(extremal_su2(2, "lowest")).is_zero()
    for l in range(9):
        assert extremal_su2(l, "lowest") == closed_form(l, -l)
        assert extremal_su2(l, "highest") == closed_form(l, l)


def test_extremal_jfamily():
    assert extremal_Jfamily(0) == closed_form(0, 0)
    assert extremal_Jfamily(1) == closed_form(1, 1)
    for m in (-2, 2):
        assert make_J(abs(m), "minus")(extremal_Jfamily(m)).is_zero()
    for m in range(-8, 9):
        # the fixed-m extremal phase agrees with the fixed-l one
        assert extremal_Jfamily(m) == closed_form(abs(m), m)


def test_extremal_k():
    assert extremal_K(1) == closed_form(0, 0)
    assert extremal_K(2) == SphereFunction.single(0, COS * sqrt_over_pi(Fraction(3, 4)))
    for d in range(1, 10):
        m0 = co.k_lowest_m(d)
        assert extremal_K(d) == closed_form(m0 + d - 1, m0)
        assert make_K(d, "minus")(extremal_K(d)).is_zero()


def test_extremal_i_odd_matches_and_even_is_off_by_one_over_k():
    assert extremal_I(1) == closed_form(0, 0)
    assert extremal_I(3) == closed_form(1, 1)
    assert extremal_I(2) == closed_form(1, 0)
    for s in range(1, 10):
        m0 = co.i_highest_m(s)
        target = closed_form(s - 1 - m0, m0)
        expected = Fraction(1) if s % 2 or s == 2 else Fraction(2, s)
        assert extremal_I(s) == target * expected


def test_generate_via_l_examples():
    assert generate_via_L(1, 0) == closed_form(1, 0)
    assert generate_via_L(2, -2) == extremal_su2(2, "lowest")
    assert generate_via_L(3, 2) == closed_form(3, 2)


def test_generate_via_j_examples():
    assert generate_via_J(2, 2) == extremal_Jfamily(2)
    assert generate_via_J(1, 0) == closed_form(1, 0)
    assert generate_via_J(4, -2) == closed_form(4, -2)


@pytest.mark.parametrize("lm", ALL6)
def test_routes_agree(lm):
    l, m = lm
    Y = closed_form(l, m)
    assert generate_via_L(l, m) == Y
    assert generate_via_L(l, m, branch="highest") == Y
    assert generate_via_J(l, m) == Y


def test_generate_via_k():
    assert generate_via_K(1, 0) == closed_form(0, 0)
    assert generate_via_K(1, 1) == closed_form(1, 1)
    assert co.k_generation_norm_sq(1, 1) == co.telescoped_k_norm_sq(1, 1)
    assert generate_via_K(2, 1) == closed_form(2, 1)
    for d in range(1, 10):
        for l, m in enumerate_subspace(SubspaceLabel("H_d_plus", d), 6):
            assert generate_via_K(d, m) == closed_form(l, m)
            assert co.k_generation_norm_sq(d, m) == co.telescoped_k_norm_sq(d, m)
    with pytest.raises(IndexOutOfRange):
        generate_via_K(3, -2)


def test_generate_via_i():
    assert generate_via_I(1, 0) == closed_form(0, 0)
    assert generate_via_I(3, 0) == closed_form(2, 0)
    assert co.i_generation_norm_sq(3, 0) == co.telescoped_i_norm_sq(3, 0)
    assert generate_via_I(2, -1) == closed_form(2, -1)
    for s in range(1, 10):
        for l, m in enumerate_subspace(SubspaceLabel("H_s_minus", s), 6):
            assert co.i_generation_norm_sq(s, m) == co.telescoped_i_norm_sq(s, m)
            got = generate_via_I(s, m)
            c = project(got, l, m)
            assert got == closed_form(l, m) * c
            # the only deviation is inherited from the even-s highest state
            assert c == (1 if s % 2 or s == 2 else Fraction(2, s))
    with pytest.raises(IndexOutOfRange):
        generate_via_I(3, 2)


def test_enumeration_examples():
    def pairs(label, cutoff):
        return [tuple(i) for i in enumerate_subspace(label, cutoff)]

    assert pairs(SubspaceLabel("H_l", 2), 5) == [(2, m) for m in range(-2, 3)]
    assert pairs(SubspaceLabel("H_m", 2), 4) == [(2, 2), (3, 2), (4, 2)]
    assert pairs(SubspaceLabel(SubspaceKind.H_d_plus, 3), 4) == [(1, -1), (2, 0), (3, 1), (4, 2)]
    assert pairs(SubspaceLabel("H_s_minus", 3), 3) == [(1, 1), (2, 0), (3, -1)]


def test_subspace_label_validation():
    with pytest.raises(ValueError):
        SubspaceLabel("H_d_plus", 0)
    with pytest.raises(ValueError):
        SubspaceLabel("H_l", -1)
    with pytest.raises(ValueError):
        SubspaceLabel("H_x", 1)


@pytest.mark.parametrize("l", range(7))
def test_h_l_dimension(l):
    members = enumerate_subspace(SubspaceLabel("H_l", l), l)
    assert len(members) == 2 * l + 1
    assert gram(members).is_identity()


def test_d_and_s_families_tile_once():
    cutoff = 8
    everything = {(l, m) for l in range(cutoff + 1) for m in range(-l, l + 1)}
    for kind in ("H_d_plus", "H_s_minus"):
        seen = []
        for label in range(1, 2 * cutoff + 2):
            seen.extend(tuple(i) for i in enumerate_subspace(SubspaceLabel(kind, label), cutoff))
        assert sorted(seen) == sorted(everything)
    for l, m in everything:
        assert (l, m) in SubspaceLabel("H_d_plus", l - m + 1)
        assert (l, m) in SubspaceLabel("H_s_minus", l + m + 1)


@pytest.mark.parametrize("lm", ALL6)
def test_parity(lm):
    l, m = lm
    assert parity_reflect(closed_form(l, m)) == closed_form(l, m) * (-1) ** l


def test_enumeration_order_is_l_then_m():
    members = enumerate_subspace(SubspaceLabel("H_m", -1), 6)
    assert members == sorted(members)
    assert all(isinstance(i, HarmonicIndex) for i in members)


def test_float_value_of_y00():
    assert float(closed_form(0, 0)(1.0, 2.0).real) == pytest.approx(1 / math.sqrt(4 * math.pi), abs=1e-14)
