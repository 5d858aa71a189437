"""Ladder operators on the sphere and identities assembled from them.

Every operator here has the shape ``e^{iΔm φ}(α ∂θ + i β ∂φ + γ)`` with real
trigonometric ``α, β, γ``; see :class:`~sphladder.sphere.LadderOperator` for
how ``i β ∂φ`` is folded into the real coefficient ``b = -β``.

Integer parameters (``l``, ``d``, ``s``) are deliberately unconstrained here.
Representation bounds belong to the callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .scalar import ONE, ZERO
from .sphere import COS, SIN, UNIT, LadderOperator, SphereFunction, ThetaForm, TrigCoeff

__all__ = [
    "Family",
    "OperatorFamily",
    "make_su2",
    "make_J",
    "make_K",
    "make_I",
    "make_A",
    "L_PLUS",
    "L_MINUS",
    "L_Z",
    "commutator",
    "z_action",
    "casimir_su2",
    "casimir_u11_K",
    "casimir_u11_I",
    "shape_invariance_residual",
]

_COT = TrigCoeff(COS, 1)  # cos/sin
_CSC = TrigCoeff(UNIT, 1)  # 1/sin
_CSC_PLUS_SIN = TrigCoeff(ThetaForm((2 * ONE, ZERO, -ONE)), 1)  # (2 - cos^2)/sin


def _neg(c: TrigCoeff) -> TrigCoeff:
    return TrigCoeff(-c.form, c.sin_power)


def _scaled(form: ThetaForm, k) -> TrigCoeff:
    return TrigCoeff(form * k)


def _sign(which: str) -> int:
    if which in ("plus", "+", "+1"):
        return 1
    if which in ("minus", "-", "-1"):
        return -1
    raise ValueError(f"sign must be 'plus' or 'minus', got {which!r}")


def make_su2(which: str) -> LadderOperator:
    """``L± = e^{±iφ}(±∂θ + i cotθ ∂φ)`` or ``Lz = -i∂φ``."""
    if which == "z":
        return LadderOperator(0, b=TrigCoeff(UNIT), name="Lz")
    sgn = _sign(which)
    return LadderOperator(
        sgn,
        a=_scaled(UNIT, sgn),
        b=_neg(_COT),
        name="L+" if sgn > 0 else "L-",
    )


L_PLUS = make_su2("plus")
L_MINUS = make_su2("minus")
L_Z = make_su2("z")


def make_J(l: int, sign: str) -> LadderOperator:
    """``J±(l) = ±sinθ ∂θ + l cosθ``; leaves the Fourier mode unchanged."""
    sgn = _sign(sign)
    return LadderOperator(
        0,
        a=_scaled(SIN, sgn),
        c=_scaled(COS, l),
        name=f"J{'+' if sgn > 0 else '-'}({l})",
    )


def make_K(d: int, sign: str) -> LadderOperator:
    """``K±^d = e^{±iφ}(±cosθ ∂θ + i(1/sinθ + sinθ)∂φ - (d - 1/2 ± 1/2) sinθ)``."""
    sgn = _sign(sign)
    shift = d if sgn > 0 else d - 1
    return LadderOperator(
        sgn,
        a=_scaled(COS, sgn),
        b=_neg(_CSC_PLUS_SIN),
        c=_scaled(SIN, -shift),
        name=f"K{'+' if sgn > 0 else '-'}^{d}",
    )


def make_I(s: int, sign: str) -> LadderOperator:
    """``I±^s = e^{±iφ}(±cosθ ∂θ + i(1/sinθ + sinθ)∂φ + (s - 1/2 ∓ 1/2) sinθ)``."""
    sgn = _sign(sign)
    shift = s - 1 if sgn > 0 else s
    return LadderOperator(
        sgn,
        a=_scaled(COS, sgn),
        b=_neg(_CSC_PLUS_SIN),
        c=_scaled(SIN, shift),
        name=f"I{'+' if sgn > 0 else '-'}^{s}",
    )


def make_A(l: int, kind: str) -> LadderOperator:
    """Mixed l/m shift operators ``e^{±iφ}(±cosθ ∂θ + (i/sinθ)∂φ ∓' l sinθ)``.

    ``kind`` is one of ``pp``, ``mm`` (both indices move together, ``-l sinθ``)
    or ``mp``, ``pm`` (indices move oppositely, ``+l sinθ``).  The second letter
    gives the direction of the Fourier shift.
    """
    if kind not in ("pp", "mm", "mp", "pm"):
        raise ValueError(f"unknown A kind {kind!r}")
    sgn = 1 if kind[1] == "p" else -1
    along = kind in ("pp", "mm")
    return LadderOperator(
        sgn,
        a=_scaled(COS, sgn),
        b=_neg(_CSC),
        c=_scaled(SIN, -l if along else l),
        name=f"A{kind}({l})",
    )


class Family(str, Enum):
    L_plus = "L_plus"
    L_minus = "L_minus"
    L_z = "L_z"
    J_plus = "J_plus"
    J_minus = "J_minus"
    K_plus = "K_plus"
    K_minus = "K_minus"
    K_z = "K_z"
    I_plus = "I_plus"
    I_minus = "I_minus"
    I_z = "I_z"
    A_pp = "A_pp"
    A_mm = "A_mm"
    A_mp = "A_mp"
    A_pm = "A_pm"


_BUILDERS: dict[Family, Callable[[int], LadderOperator]] = {
    Family.L_plus: lambda _: L_PLUS,
    Family.L_minus: lambda _: L_MINUS,
    Family.L_z: lambda _: L_Z,
    Family.K_z: lambda _: L_Z,
    Family.I_z: lambda _: L_Z,
    Family.J_plus: lambda l: make_J(l, "plus"),
    Family.J_minus: lambda l: make_J(l, "minus"),
    Family.K_plus: lambda d: make_K(d, "plus"),
    Family.K_minus: lambda d: make_K(d, "minus"),
    Family.I_plus: lambda s: make_I(s, "plus"),
    Family.I_minus: lambda s: make_I(s, "minus"),
    Family.A_pp: lambda l: make_A(l, "pp"),
    Family.A_mm: lambda l: make_A(l, "mm"),
    Family.A_mp: lambda l: make_A(l, "mp"),
    Family.A_pm: lambda l: make_A(l, "pm"),
}

_UNPARAMETERIZED = {Family.L_plus, Family.L_minus, Family.L_z, Family.K_z, Family.I_z}


@dataclass(frozen=True)
class OperatorFamily:
    """A named operator with its integer parameter (``None`` for L± and the z generators)."""

    family: Family
    parameter: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family in _UNPARAMETERIZED:
            if self.parameter is not None:
                raise ValueError(f"{self.family.value} takes no parameter")
        elif self.parameter is None:
            raise ValueError(f"{self.family.value} needs an integer parameter")

    def build(self) -> LadderOperator:
        return _BUILDERS[self.family](self.parameter)


# -- composite identities ----------------------------------------------------


def commutator(A: LadderOperator, B: LadderOperator, f: SphereFunction) -> SphereFunction:
    """``[A, B] f`` evaluated as ``A(B f) - B(A f)``."""
    return A(B(f)) - B(A(f))


def z_action(f: SphereFunction, weight: Callable[[int], object]) -> SphereFunction:
    """Multiply mode ``m`` by ``weight(m)``: any polynomial in the z generator."""
    return SphereFunction({m: form * weight(m) for m, form in f.modes.items()})


def casimir_su2(f: SphereFunction) -> SphereFunction:
    """``L+ L- + Lz^2 - Lz``."""
    return L_PLUS(L_MINUS(f)) + z_action(f, lambda m: m * m - m)


def casimir_u11_K(d: int, f: SphereFunction) -> SphereFunction:
    """``K+^d K-^d - 4 Kz^2 - 2(2d - 3) Kz``."""
    return make_K(d, "plus")(make_K(d, "minus")(f)) + z_action(
        f, lambda m: -4 * m * m - 2 * (2 * d - 3) * m
    )


def casimir_u11_I(s: int, f: SphereFunction) -> SphereFunction:
    """``I+^s I-^s - 4 Iz^2 + 2(2s + 1) Iz``."""
    return make_I(s, "plus")(make_I(s, "minus")(f)) + z_action(
        f, lambda m: -4 * m * m + 2 * (2 * s + 1) * m
    )


def shape_invariance_residual(l: int, f: SphereFunction) -> SphereFunction:
    """``J-(l+1) J+(l+1) f - J+(l) J-(l) f - (2l+1) f``; zero for every ``l``."""
    upper = make_J(l + 1, "minus")(make_J(l + 1, "plus")(f))
    lower = make_J(l, "plus")(make_J(l, "minus")(f))
    return upper - lower - f * (2 * l + 1)
