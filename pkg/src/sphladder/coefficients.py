"""Squared one-step ladder coefficients and generation normalizations.

Each function returns the square of the stated coefficient as an exact
:class:`~fractions.Fraction`; the coefficient itself is its nonnegative root.
The ``telescoped_*`` helpers rebuild a generation normalization from the
one-step coefficients, independently of the closed-form constants.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

# --- m shift at fixed l ---------------------------------------------------


def l_raise_sq(l: int, m: int) -> Fraction:
    """``L+ Y_l^{m-1} = c Y_l^m``."""
    return Fraction((l - m + 1) * (l + m))


def l_lower_sq(l: int, m: int) -> Fraction:
    """``L- Y_l^m = c Y_l^{m-1}``."""
    return Fraction((l - m + 1) * (l + m))


# --- l shift at fixed m ---------------------------------------------------


def j_raise_sq(l: int, m: int) -> Fraction:
    """``J+(l) Y_{l-1}^m = c Y_l^m``."""
    return Fraction(2 * l - 1, 2 * l + 1) * (l - m) * (l + m)


def j_lower_sq(l: int, m: int) -> Fraction:
    """``J-(l) Y_l^m = c Y_{l-1}^m``."""
    return Fraction(2 * l + 1, 2 * l - 1) * (l - m) * (l + m)


# --- K family, fixed l - m = d - 1 -------------------------------------------


def k_raise_sq(d: int, m: int) -> Fraction:
    """``K+^d Y_{m+d-2}^{m-1} = c Y_{m+d-1}^m``."""
    return Fraction(2 * m + 2 * d - 3, 2 * m + 2 * d - 1) * (2 * m + d - 2) * (2 * m + d - 1)


def k_lower_sq(d: int, m: int) -> Fraction:
    """``K-^d Y_{m+d-1}^m = c Y_{m+d-2}^{m-1}``."""
    return Fraction(2 * m + 2 * d - 1, 2 * m + 2 * d - 3) * (2 * m + d - 2) * (2 * m + d - 1)


def k_lowest_m(d: int) -> int:
    """Lowest weight of the fixed ``l - m = d - 1`` family (``-j`` or ``1 - k``)."""
    return -((d - 1) // 2)


def k_generation_norm_sq(d: int, m: int) -> Fraction:
    """Squared divisor applied after ``m - m_min`` raisings of the lowest state."""
    if d % 2:
        j = (d - 1) // 2
        return Fraction((2 * j + 1) * factorial(2 * m + 2 * j), 2 * m + 4 * j + 1)
    k = d // 2
    return Fraction((2 * k + 1) * factorial(2 * m + 2 * k - 1), 2 * m + 4 * k - 1)


def telescoped_k_norm_sq(d: int, m: int) -> Fraction:
    return prod((k_raise_sq(d, mm) for mm in range(k_lowest_m(d) + 1, m + 1)), start=Fraction(1))


# --- I family, fixed l + m = s - 1 ---------------------------------------


def i_raise_sq(s: int, m: int) -> Fraction:
    """``I+^s Y_{-m+s}^{m-1} = c Y_{-m+s-1}^m``."""
    return Fraction(-2 * m + 2 * s + 1, -2 * m + 2 * s - 1) * (-2 * m + s) * (-2 * m + s + 1)


def i_lower_sq(s: int, m: int) -> Fraction:
    """``I-^s Y_{-m+s-1}^m = c Y_{-m+s}^{m-1}``."""
    return Fraction(-2 * m + 2 * s - 1, -2 * m + 2 * s + 1) * (-2 * m + s) * (-2 * m + s + 1)


def i_highest_m(s: int) -> int:
    """Highest weight of the fixed ``l + m = s - 1`` family (``j`` or ``k - 1``)."""
    return (s - 1) // 2


def i_generation_norm_sq(s: int, m: int) -> Fraction:
    if s % 2:
        j = (s - 1) // 2
        return Fraction((2 * j + 1) * factorial(2 * j - 2 * m), 4 * j - 2 * m + 1)
    k = s // 2
    return Fraction((2 * k + 1) * factorial(2 * k - 2 * m - 1), 4 * k - 2 * m - 1)


def telescoped_i_norm_sq(s: int, m: int) -> Fraction:
    return prod((i_lower_sq(s, mm) for mm in range(m + 1, i_highest_m(s) + 1)), start=Fraction(1))


# --- mixed operators --------------------------------------------------------


def a_pp_sq(l: int, m: int) -> Fraction:
    """``A++(l) Y_{l-1}^{m-1} = c Y_l^m``."""
    return Fraction(2 * l - 1, 2 * l + 1) * (l + m - 1) * (l + m)


def a_mm_sq(l: int, m: int) -> Fraction:
    """``A--(l) Y_l^m = c Y_{l-1}^{m-1}``."""
    return Fraction(2 * l + 1, 2 * l - 1) * (l + m - 1) * (l + m)


def a_mp_sq(l: int, m: int) -> Fraction:
    """``A-+(l+1) Y_{l+1}^{m-1} = c Y_l^m``."""
    return Fraction(2 * l + 3, 2 * l + 1) * (l - m + 1) * (l - m + 2)


def a_pm_sq(l: int, m: int) -> Fraction:
    """``A+-(l+1) Y_l^m = c Y_{l+1}^{m-1}``."""
    return Fraction(2 * l + 1, 2 * l + 3) * (l - m + 1) * (l - m + 2)
