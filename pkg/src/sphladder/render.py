"""Text renderings of harmonics and ladder-coefficient tables."""

from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import coefficients as co
from .harmonics import SubspaceLabel, closed_form, enumerate_subspace
from .inner import project
from .operators import L_MINUS, L_PLUS, make_A, make_I, make_J, make_K
from .scalar import Scalar
from .sphere import LadderOperator, SphereFunction

__all__ = [
    "UnknownFamily",
    "format_scalar",
    "render_exact",
    "render_latex",
    "render_grid",
    "format_sqrt",
    "coefficient_table",
    "TABLE_FAMILIES",
]


class UnknownFamily(KeyError):
    pass


def _pi_suffix(e: int) -> str:
    return "" if e == 0 else f"·π^({e}/2)"


def format_scalar(c: Scalar) -> str:
    """``q√r`` terms, e.g. ``√3/2·π^(-1/2)``; a rational term keeps an explicit ``√1``."""
    parts = []
    for r, q in c.terms:
        if r == 1:
            parts.append(f"{q}·√1")
            continue
        sign = "-" if q < 0 else ""
        a, den = abs(q.numerator), q.denominator
        parts.append(f"{sign}{'' if a == 1 else a}√{r}{'' if den == 1 else f'/{den}'}")
    if not parts:
        return "0"
    body = parts[0] if len(parts) == 1 else "(" + " + ".join(parts).replace("+ -", "- ") + ")"
    return body + _pi_suffix(c.pi_exponent)


def _phase(m: int) -> str:
    if m == 0:
        return ""
    k = "" if abs(m) == 1 else str(abs(m))
    return f"e^({'-' if m < 0 else ''}{k}iφ)"


def _cos(k: int) -> str:
    return "" if k == 0 else "cosθ" if k == 1 else f"cos^{k}θ"


def render_exact(f: SphereFunction) -> str:
    terms = []
    for m, form in f.modes.items():
        for sin, poly in ((False, form.even), (True, form.odd)):
            for k, c in enumerate(poly):
                if c.is_zero():
                    continue
                factors = [format_scalar(c), _phase(m), "sinθ" if sin else "", _cos(k)]
                terms.append("·".join(x for x in factors if x))
    return " + ".join(terms).replace(" + -", " - ") if terms else "0"


def _latex_scalar(c: Scalar) -> str:
    if len(c.terms) != 1:
        inner = " + ".join(
            f"{q}" if r == 1 else f"{q}\\sqrt{{{r}}}" for r, q in c.terms
        )
        return f"\\left({inner}\\right)" + ("" if not c.pi_exponent else f"\\pi^{{{Fraction(c.pi_exponent, 2)}}}")
    (r, q), = c.terms
    sign = "-" if q < 0 else ""
    num = abs(q.numerator)
    top = ("" if num == 1 and r != 1 else str(num)) + ("" if r == 1 else f"\\sqrt{{{r}}}")
    bottom = "" if q.denominator == 1 else str(q.denominator)
    if c.pi_exponent == -1:
        bottom += "\\sqrt{\\pi}"
    elif c.pi_exponent:
        top += f"\\pi^{{{Fraction(c.pi_exponent, 2)}}}"
    return f"{sign}\\frac{{{top}}}{{{bottom}}}" if bottom else f"{sign}{top}"


def render_latex(f: SphereFunction) -> str:
    terms = []
    for m, form in f.modes.items():
        for sin, poly in ((False, form.even), (True, form.odd)):
            for k, c in enumerate(poly):
                if c.is_zero():
                    continue
                bits = [_latex_scalar(c)]
                if m:
                    bits.append(f"e^{{{'-' if m < 0 else ''}{'' if abs(m) == 1 else abs(m)}i\\phi}}")
                if sin:
                    bits.append("\\sin\\theta")
                if k:
                    bits.append("\\cos\\theta" if k == 1 else f"\\cos^{{{k}}}\\theta")
                terms.append(" ".join(bits))
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def render_grid(f: SphereFunction, n_theta: int = 9, n_phi: int = 8) -> str:
    """CSV samples on the equiangular grid θ = iπ/(n_theta-1), φ = 2πk/n_phi."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "phi", "re", "im"])
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = 2 * math.pi * np.arange(n_phi) / n_phi
    for t in thetas:
        values = f(t, phis)
        for p, v in zip(phis, np.atleast_1d(values)):
            writer.writerow([f"{t:.12g}", f"{p:.12g}", f"{v.real:.12g}", f"{v.imag:.12g}"])
    return buf.getvalue()


def format_sqrt(c: Scalar) -> str:
    """Write a single-radical value as ``√(q)`` of its square: ``√2``, ``√(1/3)``, ``-√(2/3)``."""
    sq = (c * c).as_fraction()
    sign = "-" if float(c) < 0 else ""
    if sq.denominator == 1:
        root = math.isqrt(sq.numerator)
        if root * root == sq.numerator:
            return f"{sign}{root}"
        return f"{sign}√{sq.numerator}"
    return f"{sign}√({sq})"


# -- coefficient tables --------------------------------------------------------

Row = tuple[dict, tuple[int, int], tuple[int, int], Fraction]


def _l_rows(l_max: int, kind: str) -> Iterator[Row]:
    for l in range(l_max + 1):
        for m in range(-l + 1, l + 1):
            if kind == "plus":
                yield {"l": l, "m": m}, (l, m - 1), (l, m), co.l_raise_sq(l, m)
            else:
                yield {"l": l, "m": m}, (l, m), (l, m - 1), co.l_lower_sq(l, m)


def _j_rows(l_max: int, kind: str) -> Iterator[Row]:
    for l in range(1, l_max + 1):
        for m in range(-l + 1, l):
            if kind == "plus":
                yield {"l": l, "m": m}, (l - 1, m), (l, m), co.j_raise_sq(l, m)
            else:
                yield {"l": l, "m": m}, (l, m), (l - 1, m), co.j_lower_sq(l, m)


def _k_rows(d: int, l_max: int, kind: str) -> Iterator[Row]:
    m0 = co.k_lowest_m(d)
    for l, m in enumerate_subspace(SubspaceLabel("H_d_plus", d), l_max):
        if m > m0:
            if kind == "plus":
                yield {"d": d, "m": m}, (l - 1, m - 1), (l, m), co.k_raise_sq(d, m)
            else:
                yield {"d": d, "m": m}, (l, m), (l - 1, m - 1), co.k_lower_sq(d, m)


def _i_rows(s: int, l_max: int, kind: str) -> Iterator[Row]:
    for l, m in enumerate_subspace(SubspaceLabel("H_s_minus", s), l_max - 1):
        if kind == "plus":
            yield {"s": s, "m": m}, (l + 1, m - 1), (l, m), co.i_raise_sq(s, m)
        else:
            yield {"s": s, "m": m}, (l, m), (l + 1, m - 1), co.i_lower_sq(s, m)


def _a_rows(l_max: int, kind: str) -> Iterator[Row]:
    for l in range(l_max + 1):
        for m in range(-l, l + 1):
            if kind == "pp" and l >= 1 and abs(m - 1) <= l - 1:
                yield {"l": l, "m": m}, (l - 1, m - 1), (l, m), co.a_pp_sq(l, m)
            elif kind == "mm" and l >= 1 and abs(m - 1) <= l - 1:
                yield {"l": l, "m": m}, (l, m), (l - 1, m - 1), co.a_mm_sq(l, m)
            elif kind == "mp" and l + 1 <= l_max:
                yield {"l": l, "m": m}, (l + 1, m - 1), (l, m), co.a_mp_sq(l, m)
            elif kind == "pm" and l + 1 <= l_max:
                yield {"l": l, "m": m}, (l, m), (l + 1, m - 1), co.a_pm_sq(l, m)


def _a_operator(kind: str, params: dict) -> LadderOperator:
    l = params["l"]
    return make_A(l if kind in ("pp", "mm") else l + 1, kind)


TABLE_FAMILIES = ("Lplus", "Lminus", "Jplus", "Jminus", "Kplus-d<d>", "Kminus-d<d>", "Iplus-s<s>", "Iminus-s<s>", "App", "Amm", "Amp", "Apm")


def _resolve(family: str, l_max: int) -> tuple[Iterator[Row], Callable[[dict], LadderOperator]]:
    if family in ("Lplus", "Lminus"):
        kind = family[1:]
        return _l_rows(l_max, kind), lambda p: L_PLUS if kind == "plus" else L_MINUS
    if family in ("Jplus", "Jminus"):
        kind = family[1:]
        return _j_rows(l_max, kind), lambda p: make_J(p["l"], kind)
    for prefix, letter, rows, make in (("K", "d", _k_rows, make_K), ("I", "s", _i_rows, make_I)):
        for kind in ("plus", "minus"):
            head = f"{prefix}{kind}-{letter}"
            if family.startswith(head) and family[len(head):].isdigit():
                n = int(family[len(head):])
                if n < 1:
                    break
                return rows(n, l_max, kind), lambda p, n=n, kind=kind, make=make: make(n, kind)
    if family in ("App", "Amm", "Amp", "Apm"):
        kind = family[1:]
        return _a_rows(l_max, kind), lambda p: _a_operator(kind, p)
    raise UnknownFamily(f"unknown operator family {family!r}; known: {', '.join(TABLE_FAMILIES)}")


def coefficient_table(family: str, l_max: int) -> str:
    """CSV of one-step coefficients, each obtained by applying the operator and projecting."""
    rows, build = _resolve(family, l_max)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["params", "source", "target", "coefficient", "value", "matches_formula"])
    for params, src, dst, stated_sq in rows:
        image = build(params)(closed_form(*src))
        c = project(image, *dst)
        exact = (image - closed_form(*dst) * c).is_zero()
        matches = exact and (c * c).as_fraction() == stated_sq and float(c) >= 0
        writer.writerow(
            [
                ";".join(f"{k}={v}" for k, v in params.items()),
                f"Y({src[0]},{src[1]})",
                f"Y({dst[0]},{dst[1]})",
                format_sqrt(c) if not c.is_zero() else "0",
                f"{float(c):.12g}",
                "yes" if matches else "no",
            ]
        )
    return buf.getvalue()
