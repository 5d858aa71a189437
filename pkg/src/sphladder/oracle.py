"""Floating-point spherical harmonics from the three-term Legendre recurrence.

Independent of the exact construction; used only as a numeric cross-check.
"""

from __future__ import annotations

import math

import numpy as np


def assoc_legendre(l: int, m: int, x):
    """``P_l^m(x)`` for ``0 <= m <= l``, Condon-Shortley phase included."""
    x = np.asarray(x, dtype=float)
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    pmm = (-1) ** m * math.prod(range(1, 2 * m, 2)) * s**m
    if l == m:
        return pmm
    pm1 = x * (2 * m + 1) * pmm
    for ll in range(m + 2, l + 1):
        pmm, pm1 = pm1, (x * (2 * ll - 1) * pm1 - (ll + m - 1) * pmm) / (ll - m)
    return pm1


def ylm(l: int, m: int, theta, phi):
    n = abs(m)
    norm = math.sqrt((2 * l + 1) / (4 * math.pi) * math.factorial(l - n) / math.factorial(l + n))
    value = norm * assoc_legendre(l, n, np.cos(theta)) * np.exp(1j * n * np.asarray(phi))
    if m < 0:
        value = (-1) ** n * np.conj(value)
    return value
