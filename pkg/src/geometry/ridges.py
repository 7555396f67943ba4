#!/usr/bin/env python3
"""
Ridge curves and constrained volume maxima on the screen.

For fixed y = J23 the squared volume is a downward parabola in X = x^2 with
its vertex at

    x_Vmax^2 = (A(J, J2) + Jt^2 y^2 - y^4) / (2 y^2)

and maximum V_max,x = 2 F(J1, J, y) F(J2, J3, y) / (3 |y|), F being the
triangle area. The roles of x and y swap for the ridge_y family. Ridge points
are configurations where two pairs of faces are orthogonal.
"""

import logging
from typing import Tuple

import numpy as np
from scipy.optimize import fsolve

from src.errors import NotATriangle, OutOfScreen
from src.geometry.volume import Real, ScreenPolynomial, triangle_area

logger = logging.getLogger(__name__)

Quad = Tuple[Real, Real, Real, Real]


def ridge_x_squared(y: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """Radicand of ridge_x; may be negative."""
    poly = ScreenPolynomial.from_edges(J1, J2, J3, J)
    Y = float(y) ** 2
    return (float(poly.A1) + float(poly.Jt2) * Y - Y * Y) / (2 * Y)


def ridge_y_squared(x: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """Radicand of ridge_y; may be negative."""
    poly = ScreenPolynomial.from_edges(J1, J2, J3, J)
    X = float(x) ** 2
    return (float(poly.A2) + float(poly.Jt2) * X - X * X) / (2 * X)


def ridge_x(y: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """
    x at which V^2 is maximal along the line J23 = y.

    Args:
        y: J23 value, nonzero
        J1, J2, J3, J: Continuous edges

    Returns:
        Non-negative x_Vmax

    Raises:
        OutOfScreen: If the radicand is negative
    """
    if y == 0:
        raise OutOfScreen("ridge_x is undefined at y = 0")
    sq = ridge_x_squared(y, J1, J2, J3, J)
    if sq < 0:
        raise OutOfScreen(f"ridge_x leaves the strip at y={y} (x^2 = {sq:.6g})")
    return float(np.sqrt(sq))


def ridge_y(x: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """
    y at which V^2 is maximal along the line J12 = x.

    Raises:
        OutOfScreen: If the radicand is negative
    """
    if x == 0:
        raise OutOfScreen("ridge_y is undefined at x = 0")
    sq = ridge_y_squared(x, J1, J2, J3, J)
    if sq < 0:
        raise OutOfScreen(f"ridge_y leaves the strip at x={x} (y^2 = {sq:.6g})")
    return float(np.sqrt(sq))


def vmax_along_x(y: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """
    Maximum volume on the line J23 = y.

    Returns:
        2 F(J1, J, y) F(J2, J3, y) / (3 |y|)

    Raises:
        OutOfScreen: If either face is not a triangle
    """
    try:
        return 2 * triangle_area(J1, J, y) * triangle_area(J2, J3, y) / (3 * abs(float(y)))
    except NotATriangle as e:
        raise OutOfScreen(f"no volume maximum at y={y}: {e}") from e


def vmax_along_y(x: float, J1: Real, J2: Real, J3: Real, J: Real) -> float:
    """
    Maximum volume on the line J12 = x.

    Returns:
        2 F(J1, J2, x) F(J, J3, x) / (3 |x|)

    Raises:
        OutOfScreen: If either face is not a triangle
    """
    try:
        return 2 * triangle_area(J1, J2, x) * triangle_area(J, J3, x) / (3 * abs(float(x)))
    except NotATriangle as e:
        raise OutOfScreen(f"no volume maximum at x={x}: {e}") from e


def ridge_crossing(J1: Real, J2: Real, J3: Real, J: Real,
                   start: Tuple[float, float]) -> Tuple[float, float]:
    """
    Intersection of the two ridges, where V^2 is stationary in both directions.

    Args:
        J1, J2, J3, J: Continuous edges
        start: Initial (x, y) guess, usually the screen centre

    Returns:
        (x, y) of the crossing
    """
    poly = ScreenPolynomial.from_edges(J1, J2, J3, J)
    Jt2, A1, A2 = float(poly.Jt2), float(poly.A1), float(poly.A2)

    def equations(p):
        X, Y = p
        return [2 * X * Y - (A1 + Jt2 * Y - Y * Y), 2 * X * Y - (A2 + Jt2 * X - X * X)]

    X, Y = fsolve(equations, [start[0] ** 2, start[1] ** 2], xtol=1e-14)
    logger.debug(f"ridge crossing at X={X:.10g}, Y={Y:.10g}")
    return float(np.sqrt(X)), float(np.sqrt(Y))
