"""Exact spherical harmonics: closed form, extremal states, algebraic routes.

The extremal-state constructors reproduce the tabulated closed forms
constant-for-constant, phases included, so that any slip in those constants
surfaces when they are compared against :func:`closed_form`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import coefficients as co
from .operators import L_MINUS, L_PLUS, make_I, make_J, make_K
from .scalar import INV_SQRT_PI, Scalar, scalar_sqrt
from .sphere import COS, SphereFunction, ThetaForm

__all__ = [
    "IndexOutOfRange",
    "HarmonicIndex",
    "SubspaceKind",
    "SubspaceLabel",
    "closed_form",
    "rodrigues",
    "extremal_su2",
    "extremal_Jfamily",
    "extremal_K",
    "extremal_I",
    "generate_via_L",
    "generate_via_J",
    "generate_via_K",
    "generate_via_I",
    "enumerate_subspace",
]


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HarmonicIndex:
    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or abs(self.m) > self.l:
            raise IndexOutOfRange(f"no harmonic Y_{self.l}^{self.m}")

    def __iter__(self):
        return iter((self.l, self.m))


def _check(l: int, m: int) -> None:
    if l < 0 or abs(m) > l:
        raise IndexOutOfRange(f"no harmonic Y_{l}^{m}")


def _sqrt_over_pi(q: Fraction) -> Scalar:
    """``sqrt(q / pi)``."""
    return scalar_sqrt(q) * INV_SQRT_PI


def _apply_n(op, f: SphereFunction, n: int) -> SphereFunction:
    for _ in range(n):
        f = op(f)
    return f


def rodrigues(l: int, m: int, seed_power: int) -> SphereFunction:
    """``(-1)^m N / (2^l l!) (e^{iφ}/sinθ)^m ((1/sinθ) d/dθ)^{l-m} sin^p θ``.

    With ``seed_power = 2l`` this is ``Y_l^m``.  Other seed powers are kept
    only so the verifier can show what they produce.
    """
    norm = _sqrt_over_pi(Fraction((2 * l + 1) * factorial(l + m), 4 * factorial(l - m)))
    const = norm * Fraction((-1) ** (m % 2), 2**l * factorial(l))
    g = ThetaForm.sin_power(seed_power)
    for _ in range(l - m):
        g = g.derivative().div_sin()
    if m >= 0:
        for _ in range(m):
            g = g.div_sin()
    else:
        g = g.mul_sin(-m)
    return SphereFunction.single(m, g * const)


@lru_cache(maxsize=None)
def closed_form(l: int, m: int) -> SphereFunction:
    """Exact ``Y_l^m`` with the Condon-Shortley phase.

    >>> str(closed_form(0, 0))
    'e^(i0φ)·[(1/2·π^(-1/2))]'
    """
    _check(l, m)
    return rodrigues(l, m, 2 * l)


def _sin_state(m: int, power: int, const: Scalar, with_cos: bool = False) -> SphereFunction:
    form = ThetaForm.sin_power(power)
    if with_cos:
        form = form * COS
    return SphereFunction.single(m, form * const)


def extremal_su2(l: int, sign: str) -> SphereFunction:
    """``Y_l^{-l}`` (``sign='lowest'``) or ``Y_l^{l}`` (``'highest'``) from the displayed closed form."""
    if l < 0:
        raise IndexOutOfRange(f"l must be nonnegative, got {l}")
    const = scalar_sqrt(factorial(2 * l + 1)) * INV_SQRT_PI * Fraction(1, 2 ** (l + 1) * factorial(l))
    if sign == "lowest":
        return _sin_state(-l, l, const)
    if sign == "highest":
        return _sin_state(l, l, const * (-1) ** l)
    raise ValueError(f"sign must be 'lowest' or 'highest', got {sign!r}")


def extremal_Jfamily(m: int) -> SphereFunction:
    """``Y_{|m|}^m``, the state annihilated by ``J-(|m|)``."""
    n = abs(m)
    phase = (-1) ** n if m >= 0 else 1
    const = _sqrt_over_pi(Fraction(factorial(2 * n + 1), 4)) * Fraction(phase, 2**n * factorial(n))
    return _sin_state(m, n, const)


def extremal_K(d: int) -> SphereFunction:
    """Lowest state of the fixed ``l - m = d - 1`` family: ``Y_j^{-j}`` or ``Y_k^{1-k}``."""
    if d < 1:
        raise IndexOutOfRange(f"d must be positive, got {d}")
    if d % 2:
        j = (d - 1) // 2
        const = _sqrt_over_pi(Fraction(factorial(2 * j + 1), 4)) * Fraction(1, 2**j * factorial(j))
        return _sin_state(-j, j, const)
    k = d // 2
    # 2^{-(k+1/2)} sqrt(k (2k+1)!/pi) = sqrt(k (2k+1)! / (2 pi)) / 2^k
    const = _sqrt_over_pi(Fraction(k * factorial(2 * k + 1), 2)) * Fraction(1, 2**k * factorial(k))
    return _sin_state(1 - k, k - 1, const, with_cos=True)


def extremal_I(s: int) -> SphereFunction:
    """Highest state of the fixed ``l + m = s - 1`` family: ``Y_j^j`` or ``Y_k^{k-1}``."""
    if s < 1:
        raise IndexOutOfRange(f"s must be positive, got {s}")
    if s % 2:
        j = (s - 1) // 2
        const = _sqrt_over_pi(Fraction(factorial(2 * j + 1), 4)) * Fraction((-1) ** j, 2**j * factorial(j))
        return _sin_state(j, j, const)
    k = s // 2
    # 2^{-(k-1/2)} sqrt((2k+1)(2k-1)!/(2 pi)) = sqrt((2k+1)(2k-1)!/pi) / 2^k
    const = _sqrt_over_pi(Fraction((2 * k + 1) * factorial(2 * k - 1))) * Fraction(
        (-1) ** (k - 1), 2**k * factorial(k)
    )
    return _sin_state(k - 1, k - 1, const, with_cos=True)


def generate_via_L(l: int, m: int, branch: str = "lowest") -> SphereFunction:
    """Raise from ``Y_l^{-l}`` with L+ (default) or lower from ``Y_l^l`` with L-."""
    _check(l, m)
    if branch == "lowest":
        norm = scalar_sqrt(Fraction(factorial(l - m), factorial(2 * l) * factorial(l + m)))
        return _apply_n(L_PLUS, extremal_su2(l, "lowest"), l + m) * norm
    if branch == "highest":
        norm = scalar_sqrt(Fraction(factorial(l + m), factorial(2 * l) * factorial(l - m)))
        return _apply_n(L_MINUS, extremal_su2(l, "highest"), l - m) * norm
    raise ValueError(f"branch must be 'lowest' or 'highest', got {branch!r}")


def generate_via_J(l: int, m: int) -> SphereFunction:
    """``J+(l) ... J+(|m|+1)`` applied to ``Y_{|m|}^m``, normalized."""
    _check(l, m)
    n = abs(m)
    f = extremal_Jfamily(m)
    for ll in range(n + 1, l + 1):
        f = make_J(ll, "plus")(f)
    norm = Fraction(
        (2 * l + 1) * factorial(2 * n), (2 * n + 1) * factorial(l - m) * factorial(l + m)
    )
    return f * scalar_sqrt(norm)


def generate_via_K(d: int, m: int) -> SphereFunction:
    """``(K+^d)^n`` on the lowest state, divided by the tabulated normalization."""
    m0 = co.k_lowest_m(d) if d >= 1 else None
    if m0 is None or m < m0:
        raise IndexOutOfRange(f"(d={d}, m={m}) is not in the l - m = d - 1 family")
    f = _apply_n(make_K(d, "plus"), extremal_K(d), m - m0)
    return f * scalar_sqrt(1 / co.k_generation_norm_sq(d, m))


def generate_via_I(s: int, m: int) -> SphereFunction:
    """``(I-^s)^n`` on the highest state, divided by the tabulated normalization."""
    m0 = co.i_highest_m(s) if s >= 1 else None
    if m0 is None or m > m0:
        raise IndexOutOfRange(f"(s={s}, m={m}) is not in the l + m = s - 1 family")
    f = _apply_n(make_I(s, "minus"), extremal_I(s), m0 - m)
    return f * scalar_sqrt(1 / co.i_generation_norm_sq(s, m))


# -- Hilbert-subspace bookkeeping ---------------------------------------------


class SubspaceKind(str, Enum):
    H_l = "H_l"
    H_m = "H_m"
    H_d_plus = "H_d_plus"
    H_s_minus = "H_s_minus"


@dataclass(frozen=True)
class SubspaceLabel:
    kind: SubspaceKind
    label: int

    def __post_init__(self):
        object.__setattr__(self, "kind", SubspaceKind(self.kind))
        if self.kind is SubspaceKind.H_l and self.label < 0:
            raise ValueError("H_l needs l >= 0")
        if self.kind in (SubspaceKind.H_d_plus, SubspaceKind.H_s_minus) and self.label < 1:
            raise ValueError(f"{self.kind.value} needs a positive label")

    def __contains__(self, index) -> bool:
        l, m = index
        if l < 0 or abs(m) > l:
            return False
        if self.kind is SubspaceKind.H_l:
            return l == self.label
        if self.kind is SubspaceKind.H_m:
            return m == self.label
        if self.kind is SubspaceKind.H_d_plus:
            return l - m == self.label - 1
        return l + m == self.label - 1


def enumerate_subspace(label: SubspaceLabel, cutoff: int) -> list[HarmonicIndex]:
    """Members with ``l <= cutoff``, sorted by ``l`` then ``m``."""
    out = [
        HarmonicIndex(l, m)
        for l in range(cutoff + 1)
        for m in range(-l, l + 1)
        if (l, m) in label
    ]
    return out
