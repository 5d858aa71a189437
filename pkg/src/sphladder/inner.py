"""Inner products on S^2: exact, and a quadrature oracle that shares no code with it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .harmonics import HarmonicIndex, closed_form
from .scalar import ZERO, Scalar
from .sphere import LadderOperator, SphereFunction

__all__ = [
    "inner_exact",
    "inner_numeric",
    "wallis_moment",
    "GramResult",
    "gram",
    "numeric_gram",
    "adjoint_check",
    "adjoint_residuals",
    "project",
    "default_quadrature_size",
]

_TWO_PI = Scalar.rational(2, pi_exponent=2)
_PI = Scalar.rational(1, pi_exponent=2)


@lru_cache(maxsize=None)
def wallis_moment(j: int) -> Fraction:
    """``∫_{-1}^{1} x^{2j} sqrt(1 - x^2) dx / π``.

    Integration by parts gives ``W_j = W_{j-1} (2j - 1)/(2j + 2)`` from
    ``W_0 = 1/2``.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return Fraction(1, 2)
    return wallis_moment(j - 1) * Fraction(2 * j - 1, 2 * j + 2)


def inner_exact(f: SphereFunction, g: SphereFunction) -> Scalar:
    """``∫ conj(f) g dΩ`` exactly, conjugate-linear in ``f``.

    Stored coefficients are real, so conjugation only flips Fourier modes and
    the φ-integral pairs equal modes with weight 2π.
    """
    even_total = ZERO
    odd_total = ZERO
    gm = g.modes
    for m, F in f.modes.items():
        G = gm.get(m)
        if G is None:
            continue
        P = F * G
        for k, c in enumerate(P.even):
            if k % 2 == 0 and c:
                even_total = even_total + c * Fraction(2, k + 1)
        for k, c in enumerate(P.odd):
            if k % 2 == 0 and c:
                odd_total = odd_total + c * wallis_moment(k // 2)
    # the sqrt(1-x^2) moments carry an extra π; mixing both slots raises PiExponentMismatch
    return even_total * _TWO_PI + odd_total * _PI * _TWO_PI


def default_quadrature_size(*functions: SphereFunction) -> int:
    degree = 0
    for f in functions:
        for m, form in f.modes.items():
            degree = max(degree, abs(m), len(form.even), len(form.odd) + 1)
    return 2 * degree + 4


def _grid(n_theta: int, n_phi: int):
    if n_theta < 2 or n_phi < 1:
        raise ValueError("need n_theta >= 2 and n_phi >= 1")
    x, w = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(x)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    weights = w[:, None] * np.full(n_phi, 2 * np.pi / n_phi)[None, :]
    return theta[:, None], phi[None, :], weights


def inner_numeric(
    f: SphereFunction, g: SphereFunction, n_theta: int | None = None, n_phi: int | None = None
) -> complex:
    """Gauss-Legendre in cos θ crossed with the periodic trapezoid rule in φ."""
    n = default_quadrature_size(f, g)
    theta, phi, weights = _grid(n_theta or n, n_phi or n)
    return complex(np.sum(weights * np.conj(f(theta, phi)) * g(theta, phi)))


def numeric_gram(functions: Sequence[SphereFunction], n_theta: int, n_phi: int) -> np.ndarray:
    theta, phi, weights = _grid(n_theta, n_phi)
    samples = np.array([np.ravel(np.broadcast_to(f(theta, phi), weights.shape)) for f in functions])
    return (np.conj(samples) * weights.ravel()) @ samples.T


@dataclass(frozen=True)
class GramResult:
    indices: tuple[HarmonicIndex, ...]
    matrix: tuple[tuple[Scalar, ...], ...]

    def is_identity(self) -> bool:
        return all(
            entry == (1 if i == j else 0)
            for i, row in enumerate(self.matrix)
            for j, entry in enumerate(row)
        )

    def is_symmetric(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(i))

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.matrix])


def gram(indices: Sequence[HarmonicIndex | tuple[int, int]]) -> GramResult:
    idx = tuple(i if isinstance(i, HarmonicIndex) else HarmonicIndex(*i) for i in indices)
    funcs = [closed_form(i.l, i.m) for i in idx]
    matrix = tuple(tuple(inner_exact(a, b) for b in funcs) for a in funcs)
    return GramResult(idx, matrix)


def adjoint_check(
    opA: LadderOperator, opB: LadderOperator, f: SphereFunction, g: SphereFunction
) -> Scalar:
    """``<A f, g> - <f, B g>``: zero when B is the adjoint of A."""
    return inner_exact(opA(f), g) - inner_exact(f, opB(g))


def adjoint_residuals(
    opA: LadderOperator, opB: LadderOperator, f: SphereFunction, g: SphereFunction
) -> dict[str, Scalar]:
    """Residuals under both pairings.

    ``standard``: ``<A f, g> = <f, B g>``; ``transpose``: ``<f, A g> = <B f, g>``.
    """
    return {
        "standard": adjoint_check(opA, opB, f, g),
        "transpose": inner_exact(f, opA(g)) - inner_exact(opB(f), g),
    }


def project(f: SphereFunction, l: int, m: int) -> Scalar:
    """Component of ``f`` along ``Y_l^m``."""
    return inner_exact(closed_form(l, m), f)
