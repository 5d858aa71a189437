"""Exact numbers of the form (sum_i q_i sqrt(r_i)) * pi**(e/2).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`Scalar`
keeps a canonical tuple of ``(radicand, coefficient)`` pairs with squarefree,
strictly increasing radicands and nonzero coefficients, so structural equality
is value equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "Scalar",
    "ScalarError",
    "PiExponentMismatch",
    "NegativeRadicand",
    "SquarefreeBoundError",
    "ZERO",
    "ONE",
    "INV_SQRT_PI",
    "squarefree_split",
    "scalar_add",
    "scalar_mul",
    "scalar_sqrt",
    "scalar_is_zero",
    "scalar_to_float",
    "as_scalar",
]

TRIAL_DIVISION_BOUND = 10**6

Number = Union[int, Fraction, "Scalar"]


class ScalarError(ArithmeticError):
    pass


class PiExponentMismatch(ScalarError):
    pass


class NegativeRadicand(ScalarError):
    pass


class SquarefreeBoundError(ScalarError):
    pass


@lru_cache(maxsize=65536)
def _split(n: int, bound: int) -> tuple[int, int]:
    square_root = 1
    core = 1
    p = 2
    while p <= bound and p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            square_root *= p ** (k // 2)
            if k % 2:
                core *= p
        p += 1 if p == 2 else 2
    if n > 1:
        if p * p > n:
            # no factor up to sqrt(n): n is prime
            core *= n
        else:
            # all factors of n exceed the bound; decidable only for n < bound**3
            if n >= bound**3:
                raise SquarefreeBoundError(
                    f"cannot certify squarefree part of {n} with trial bound {bound}"
                )
            r = math.isqrt(n)
            if r * r == n:
                square_root *= r
            else:
                core *= n
    return square_root, core


def squarefree_split(n: int, bound: int = TRIAL_DIVISION_BOUND) -> tuple[int, int]:
    """Return ``(s, c)`` with ``n == s*s*c`` and ``c`` squarefree.

    >>> squarefree_split(60)
    (2, 15)
    """
    if n <= 0:
        raise ValueError(f"squarefree_split needs a positive integer, got {n}")
    return _split(n, bound)


class Scalar:
    """Immutable exact real number ``sum(q * sqrt(r)) * pi**(pi_exponent/2)``."""

    __slots__ = ("terms", "pi_exponent", "_hash")

    terms: tuple[tuple[int, Fraction], ...]
    pi_exponent: int

    def __init__(self, terms: Iterable[tuple[int, Rational]] = (), pi_exponent: int = 0):
        acc: dict[int, Fraction] = {}
        for radicand, coeff in terms:
            if radicand <= 0:
                raise NegativeRadicand(f"radicand must be positive, got {radicand}")
            s, core = squarefree_split(radicand)
            acc[core] = acc.get(core, Fraction(0)) + Fraction(coeff) * s
        canon = tuple(sorted((r, q) for r, q in acc.items() if q))
        self._set(canon, pi_exponent if canon else 0)

    def _set(self, terms, pi_exponent):
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "pi_exponent", pi_exponent)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, Fraction], ...], pi_exponent: int) -> "Scalar":
        obj = cls.__new__(cls)
        obj._set(terms, pi_exponent if terms else 0)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def rational(cls, q: Rational, pi_exponent: int = 0) -> "Scalar":
        q = Fraction(q)
        return cls._raw(((1, q),) if q else (), pi_exponent)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return self.pi_exponent == 0 and all(r == 1 for r, _ in self.terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Number) -> "Scalar":
        other = as_scalar(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.pi_exponent != other.pi_exponent:
            raise PiExponentMismatch(
                f"cannot add pi^({self.pi_exponent}/2) and pi^({other.pi_exponent}/2) terms"
            )
        acc = dict(self.terms)
        for r, q in other.terms:
            acc[r] = acc.get(r, 0) + q
        return Scalar._raw(tuple(sorted((r, q) for r, q in acc.items() if q)), self.pi_exponent)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(tuple((r, -q) for r, q in self.terms), self.pi_exponent)

    def __sub__(self, other: Number) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other: Number) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar._raw(tuple((r, q * other) for r, q in self.terms), self.pi_exponent)
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        acc: dict[int, Fraction] = {}
        for r1, q1 in self.terms:
            for r2, q2 in other.terms:
                if r1 == 1:
                    s, core = 1, r2
                elif r2 == 1:
                    s, core = 1, r1
                else:
                    g = math.gcd(r1, r2)
                    # both squarefree: r1*r2 = g^2 * (r1/g)*(r2/g)
                    s, core = g, (r1 // g) * (r2 // g)
                acc[core] = acc.get(core, 0) + q1 * q2 * s
        return Scalar._raw(
            tuple(sorted((r, q) for r, q in acc.items() if q)),
            self.pi_exponent + other.pi_exponent,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Reciprocal of a single-term value; general radical sums are not inverted."""
        if not self.terms:
            raise ZeroDivisionError("zero has no inverse")
        if len(self.terms) != 1:
            raise ScalarError("only single-term scalars can be inverted")
        (r, q), = self.terms
        return Scalar._raw(((r, 1 / (q * r)),), -self.pi_exponent)

    def __truediv__(self, other: Number) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * as_scalar(other).inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms and self.pi_exponent == other.pi_exponent

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.terms, self.pi_exponent)))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- conversion -------------------------------------------------------

    def __float__(self) -> float:
        if not self.terms:
            return 0.0
        body = math.fsum(float(q) * math.sqrt(r) for r, q in self.terms)
        return body * math.pi ** (self.pi_exponent / 2)

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for r, q in self.terms:
            if r == 1:
                parts.append(str(q))
            else:
                head = "" if q == 1 else "-" if q == -1 else f"{q}·"
                parts.append(f"{head}√{r}")
        body = " + ".join(parts).replace("+ -", "- ")
        if self.pi_exponent:
            if len(parts) > 1:
                body = f"({body})"
            body += f"·π^({self.pi_exponent}/2)"
        return body


def as_scalar(x: Number) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


ZERO = Scalar()
ONE = Scalar.rational(1)
INV_SQRT_PI = Scalar.rational(1, pi_exponent=-1)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_sqrt(q: Rational) -> Scalar:
    """Exact square root of a nonnegative rational, as a single radical term.

    ``sqrt(p/d)`` is written ``sqrt(p*d)/d`` so the radicand is an integer.
    """
    q = Fraction(q)
    if q < 0:
        raise NegativeRadicand(f"square root of negative rational {q}")
    if not q:
        return ZERO
    return Scalar(((q.numerator * q.denominator, Fraction(1, q.denominator)),))


def scalar_is_zero(a: Scalar) -> bool:
    return a.is_zero()


def scalar_to_float(a: Scalar) -> float:
    return float(a)
