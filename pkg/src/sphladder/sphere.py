"""Exact functions on the sphere and first-order operators acting on them.

A function is a finite Fourier sum ``sum_m e^{i m phi} F_m(theta)``; each
``F_m`` is a :class:`ThetaForm` ``p_even(cos t) + sin t * p_odd(cos t)`` with
polynomial coefficients over :class:`~sphladder.scalar.Scalar`.  Writing
``x = cos t`` and ``s = sin t``, the pair is closed under products because
``s**2 = 1 - x**2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "NonSmoothResult",
    "ThetaForm",
    "SphereFunction",
    "TrigCoeff",
    "LadderOperator",
    "theta_derivative",
    "theta_div_sin",
    "apply_operator",
    "sphere_equal",
    "sphere_eval",
    "parity_reflect",
    "SIN",
    "COS",
    "UNIT",
]

Poly = tuple  # tuple[Scalar, ...], index = power of x
Coefficient = Union[int, Fraction, Scalar]


class NonSmoothResult(ArithmeticError):
    """Division by sin(theta) left the polynomial algebra."""


# -- dense polynomials over Scalar ---------------------------------------


def _strip(p) -> Poly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _strip(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pscale(a: Poly, k) -> Poly:
    return _strip(c * k for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return _strip(out)


def _pderiv(a: Poly) -> Poly:
    return _strip(c * k for k, c in enumerate(a) if k)


def _times_one_minus_x2(a: Poly) -> Poly:
    # (1 - x^2) * a
    if not a:
        return ()
    out = list(a) + [ZERO, ZERO]
    for k, c in enumerate(a):
        out[k + 2] = out[k + 2] - c
    return _strip(out)


def _div_one_minus_x2(a: Poly) -> Poly:
    """Exact quotient ``a / (1 - x^2)``; raises if the remainder is nonzero."""
    if not a:
        return ()
    # long division by the monic x^2 - 1, negated at the end
    rem = list(a)
    n = len(rem)
    if n < 3:
        raise NonSmoothResult("polynomial not divisible by 1 - cos^2")
    quot = [ZERO] * (n - 2)
    for k in range(n - 1, 1, -1):
        c = rem[k]
        if c.is_zero():
            continue
        quot[k - 2] = c
        rem[k - 2] = rem[k - 2] + c
        rem[k] = ZERO
    if not (rem[0].is_zero() and rem[1].is_zero()):
        raise NonSmoothResult("polynomial not divisible by 1 - cos^2")
    return _strip(-c for c in quot)


def _reflect(a: Poly) -> Poly:
    return tuple(-c if k % 2 else c for k, c in enumerate(a))


def _peval(a: Poly, x):
    if not a:
        return 0.0 * x
    coeffs = [float(c) for c in reversed(a)]
    return np.polyval(coeffs, x)


# -- theta dependence ----------------------------------------------------


@dataclass(frozen=True)
class ThetaForm:
    """``even(cos t) + sin t * odd(cos t)``; trailing zeros stripped."""

    even: Poly = ()
    odd: Poly = ()

    def __post_init__(self):
        object.__setattr__(self, "even", _strip(as_scalar(c) for c in self.even))
        object.__setattr__(self, "odd", _strip(as_scalar(c) for c in self.odd))

    @classmethod
    def _make(cls, even: Poly, odd: Poly) -> "ThetaForm":
        # inputs already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "even", even)
        object.__setattr__(obj, "odd", odd)
        return obj

    @classmethod
    def constant(cls, c: Coefficient) -> "ThetaForm":
        return cls((as_scalar(c),))

    @classmethod
    def sin_power(cls, n: int) -> "ThetaForm":
        """``sin(t)**n`` for ``n >= 0``."""
        base: Poly = (ONE,)
        for _ in range(n // 2):
            base = _pmul(base, (ONE, ZERO, -ONE))
        return cls._make((), base) if n % 2 else cls._make(base, ())

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "ThetaForm") -> "ThetaForm":
        return ThetaForm._make(_padd(self.even, other.even), _padd(self.odd, other.odd))

    def __neg__(self) -> "ThetaForm":
        return ThetaForm._make(_pneg(self.even), _pneg(self.odd))

    def __sub__(self, other: "ThetaForm") -> "ThetaForm":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ThetaForm):
            a, b, c, d = self.even, self.odd, other.even, other.odd
            even = _padd(_pmul(a, c), _times_one_minus_x2(_pmul(b, d)))
            odd = _padd(_pmul(a, d), _pmul(b, c))
            return ThetaForm._make(even, odd)
        if isinstance(other, (int, Fraction, Scalar)):
            return ThetaForm._make(_pscale(self.even, other), _pscale(self.odd, other))
        return NotImplemented

    __rmul__ = __mul__

    def mul_cos(self) -> "ThetaForm":
        return ThetaForm._make((ZERO,) + self.even if self.even else (), (ZERO,) + self.odd if self.odd else ())

    def mul_sin(self, n: int = 1) -> "ThetaForm":
        even, odd = self.even, self.odd
        for _ in range(n):
            even, odd = _times_one_minus_x2(odd), even
        return ThetaForm._make(even, odd)

    def derivative(self) -> "ThetaForm":
        # d/dt p(x) = -s p'(x);  d/dt [s q(x)] = x q - (1 - x^2) q'
        q = self.odd
        even = _padd((ZERO,) + q if q else (), _pneg(_times_one_minus_x2(_pderiv(q))))
        return ThetaForm._make(even, _pneg(_pderiv(self.even)))

    def div_sin(self) -> "ThetaForm":
        """Divide by sin(t); requires ``even`` to be a multiple of ``1 - x^2``."""
        return ThetaForm._make(self.odd, _div_one_minus_x2(self.even))

    def reflect(self) -> "ThetaForm":
        """Pullback under t -> pi - t (x -> -x, sin t unchanged)."""
        return ThetaForm._make(_reflect(self.even), _reflect(self.odd))

    def coefficients(self) -> Iterator[Scalar]:
        yield from self.even
        yield from self.odd

    def evaluate(self, theta):
        x = np.cos(theta)
        return _peval(self.even, x) + np.sin(theta) * _peval(self.odd, x)

    def __str__(self) -> str:
        def term(c: Scalar, k: int, sin: bool) -> str:
            trig = ("sinθ·" if sin else "") + ("" if k == 0 else "cosθ" if k == 1 else f"cos^{k}θ")
            return f"({c})" + (f"·{trig.rstrip('·')}" if trig else "")

        parts = [term(c, k, False) for k, c in enumerate(self.even) if c]
        parts += [term(c, k, True) for k, c in enumerate(self.odd) if c]
        return " + ".join(parts) or "0"


SIN = ThetaForm._make((), (ONE,))
COS = ThetaForm._make((ZERO, ONE), ())
UNIT = ThetaForm._make((ONE,), ())


def theta_derivative(f: ThetaForm) -> ThetaForm:
    return f.derivative()


def theta_div_sin(f: ThetaForm) -> ThetaForm:
    return f.div_sin()


# -- functions on S^2 ----------------------------------------------------


class SphereFunction:
    """Finite sum ``sum_m e^{i m phi} F_m(theta)``; zero modes are never stored."""

    __slots__ = ("_modes",)

    def __init__(self, modes: Mapping[int, ThetaForm] | Iterable[tuple[int, ThetaForm]] = ()):
        items = modes.items() if isinstance(modes, Mapping) else modes
        acc: dict[int, ThetaForm] = {}
        for m, form in items:
            acc[m] = acc[m] + form if m in acc else form
        object.__setattr__(self, "_modes", {m: acc[m] for m in sorted(acc) if acc[m]})

    def __setattr__(self, name, value):
        raise AttributeError("SphereFunction is immutable")

    @classmethod
    def single(cls, m: int, form: ThetaForm) -> "SphereFunction":
        return cls({m: form})

    @property
    def modes(self) -> Mapping[int, ThetaForm]:
        return MappingProxyType(self._modes)

    def is_zero(self) -> bool:
        return not self._modes

    def __bool__(self) -> bool:
        return bool(self._modes)

    def __add__(self, other: "SphereFunction") -> "SphereFunction":
        if not isinstance(other, SphereFunction):
            return NotImplemented
        return SphereFunction(list(self._modes.items()) + list(other._modes.items()))

    def __neg__(self) -> "SphereFunction":
        return SphereFunction({m: -f for m, f in self._modes.items()})

    def __sub__(self, other: "SphereFunction") -> "SphereFunction":
        return self + (-other)

    def __mul__(self, k: Coefficient) -> "SphereFunction":
        if not isinstance(k, (int, Fraction, Scalar)):
            return NotImplemented
        return SphereFunction({m: f * k for m, f in self._modes.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SphereFunction):
            return NotImplemented
        return self._modes == other._modes

    def __hash__(self) -> int:
        return hash(tuple(self._modes.items()))

    def coefficients(self) -> Iterator[Scalar]:
        for form in self._modes.values():
            yield from form.coefficients()

    def max_abs_coefficient(self) -> float:
        return max((abs(float(c)) for c in self.coefficients()), default=0.0)

    def __call__(self, theta, phi):
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        total = np.zeros(np.broadcast(theta, phi).shape, dtype=complex)
        for m, form in self._modes.items():
            total = total + np.exp(1j * m * phi) * form.evaluate(theta)
        return total[()] if total.ndim == 0 else total

    def __repr__(self) -> str:
        return f"SphereFunction({dict(self._modes)!r})"

    def __str__(self) -> str:
        if not self._modes:
            return "0"
        return " + ".join(f"e^(i{m}φ)·[{form}]" for m, form in self._modes.items())


def sphere_equal(f: SphereFunction, g: SphereFunction) -> bool:
    return (f - g).is_zero()


def sphere_eval(f: SphereFunction, theta: float, phi: float) -> complex:
    return complex(f(theta, phi))


def parity_reflect(f: SphereFunction) -> SphereFunction:
    """Pullback under the antipodal map (theta, phi) -> (pi - theta, phi + pi)."""
    return SphereFunction({m: form.reflect() * (-1) ** (m % 2) for m, form in f.modes.items()})


# -- first-order operators ------------------------------------------------


@dataclass(frozen=True)
class TrigCoeff:
    """The trigonometric Laurent coefficient ``form / sin(t)**sin_power``."""

    form: ThetaForm = field(default_factory=ThetaForm)
    sin_power: int = 0

    def is_zero(self) -> bool:
        return self.form.is_zero()


@dataclass(frozen=True)
class LadderOperator:
    """Maps ``e^{imφ} f(θ)`` to ``e^{i(m+Δm)φ} [a f' + m b f + c f]``.

    A term ``i β(θ) ∂φ`` is carried by ``b = -β``, so every coefficient is real.
    """

    delta_m: int
    a: TrigCoeff = field(default_factory=TrigCoeff)
    b: TrigCoeff = field(default_factory=TrigCoeff)
    c: TrigCoeff = field(default_factory=TrigCoeff)
    name: str = ""

    def __post_init__(self):
        if self.delta_m not in (-1, 0, 1):
            raise ValueError(f"delta_m must be -1, 0 or 1, got {self.delta_m}")

    def __call__(self, f: SphereFunction) -> SphereFunction:
        return apply_operator(self, f)

    def apply_mode(self, m: int, f: ThetaForm) -> ThetaForm:
        terms = []
        if not self.a.is_zero():
            terms.append((self.a, f.derivative()))
        if m and not self.b.is_zero():
            terms.append((self.b, f * m))
        if not self.c.is_zero():
            terms.append((self.c, f))
        if not terms:
            return ThetaForm()
        top = max(coeff.sin_power for coeff, _ in terms)
        acc = ThetaForm()
        for coeff, g in terms:
            acc = acc + (coeff.form * g).mul_sin(top - coeff.sin_power)
        for _ in range(top):
            acc = acc.div_sin()
        return acc

    def __str__(self) -> str:
        return self.name or repr(self)


def apply_operator(op: LadderOperator, f: SphereFunction) -> SphereFunction:
    return SphereFunction(
        (m + op.delta_m, op.apply_mode(m, form)) for m, form in f.modes.items()
    )
