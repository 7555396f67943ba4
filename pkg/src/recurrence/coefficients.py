#!/usr/bin/env python3
"""
Coefficients of the three-term recurrence in j12 for fixed j1, j2, j3, j, j23.

Textbook form:

    x E(x+1) f(x+1) + F(x) f(x) + (x+1) E(x) f(x-1) = 0

    E(x) = sqrt[(x^2 - (j1-j2)^2)((j1+j2+1)^2 - x^2)(x^2 - (j3-j)^2)((j3+j+1)^2 - x^2)]
    F(x) = (2x+1) {X(-X + a + b) + c(X + a - b) + d(X - a + b) - 2 X l}

with X = x(x+1), a = j1(j1+1), b = j2(j2+1), c = j3(j3+1), d = j(j+1) and
l = j23(j23+1). For u(x) = sqrt(2x+1) f(x) the same relation is a symmetric
tridiagonal eigenproblem with eigenvalue l:

    b(x) u(x-1) + D(x) u(x) + b(x+1) u(x+1) = l u(x)

    D(x) = (a + b + c + d - X)/2 + (a - b)(c - d)/(2X)
    b(x) = E(x) / (2x sqrt(4x^2 - 1))

which is the form the screen builder iterates.
"""

from typing import Tuple

import numpy as np

from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels
from src.exact.racah import sixj_exact


def _casimirs(j1: float, j2: float, j3: float, j: float) -> Tuple[float, float, float, float]:
    return j1 * (j1 + 1), j2 * (j2 + 1), j3 * (j3 + 1), j * (j + 1)


def coefficient_e(x, j1: float, j2: float, j3: float, j: float):
    """E(x); zero at the ends of the j12 range. Accepts numpy arrays."""
    x2 = np.asarray(x, dtype=float) ** 2
    prod = ((x2 - (j1 - j2) ** 2) * ((j1 + j2 + 1) ** 2 - x2)
            * (x2 - (j3 - j) ** 2) * ((j3 + j + 1) ** 2 - x2))
    return np.sqrt(np.maximum(prod, 0.0))


def coefficient_f(x, j1: float, j2: float, j3: float, j: float, j23: float):
    """F(x) of the textbook form. Accepts numpy arrays."""
    x = np.asarray(x, dtype=float)
    X = x * (x + 1)
    a, b, c, d = _casimirs(j1, j2, j3, j)
    lam = j23 * (j23 + 1)
    return (2 * x + 1) * (X * (-X + a + b) + c * (X + a - b) + d * (X - a + b) - 2 * X * lam)


def diagonal(x, j1: float, j2: float, j3: float, j: float):
    """D(x) of the symmetric form; the 1/X term is dropped at x = 0."""
    x = np.asarray(x, dtype=float)
    X = x * (x + 1)
    a, b, c, d = _casimirs(j1, j2, j3, j)
    cross = np.divide((a - b) * (c - d), 2 * X, out=np.zeros_like(X), where=X != 0)
    return (a + b + c + d - X) / 2 + cross


def off_diagonal(x, j1: float, j2: float, j3: float, j: float):
    """b(x), coupling x-1 and x. Only defined for x >= 1."""
    x = np.asarray(x, dtype=float)
    return coefficient_e(x, j1, j2, j3, j) / (2 * x * np.sqrt(4 * x * x - 1))


def textbook_residual(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                      j12: HalfIntLike, j23: HalfIntLike) -> float:
    """
    Residual of the textbook recurrence at j12 with exact 6j values plugged in.

    The E(x) square roots are evaluated in floating point, so the result is
    returned relative to the largest of the three terms.

    Returns:
        |sum of terms| / max |term|, 0 when every term vanishes
    """
    h1, h2, h3, h, h12, h23 = (HalfInt.of(v) for v in (j1, j2, j3, j, j12, j23))
    fj = [float(v) for v in (h1, h2, h3, h)]
    x = float(h12)

    def value(k: HalfInt) -> float:
        labels = SixJLabels(h1, h2, k, h3, h, h23)
        return sixj_exact(labels).to_float() if labels.is_valid() else 0.0

    terms = [
        x * float(coefficient_e(x + 1, *fj)) * value(h12 + 1),
        float(coefficient_f(x, *fj, float(h23))) * value(h12),
        (x + 1) * float(coefficient_e(x, *fj)) * value(h12 - 1) if h12.twice >= 2 else 0.0,
    ]
    scale = max(abs(t) for t in terms)
    return 0.0 if scale == 0 else abs(sum(terms)) / scale
