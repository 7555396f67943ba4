#!/usr/bin/env python3
"""
Caustic of the 3j symbol and its limit from the tetrahedron.

The 3j caustic is the vanishing of the bordered 4x4 determinant of the
triangle with squared sides J_i^2 - m_i^2, i.e. the projection of the
(J1, J2, J3) triangle orthogonal to the quantisation axis. Pushing three
edges of the tetrahedron to L_i + R with R -> infinity recovers it:

    det5(R) / (2 R^2)  ->  -det4

with m1 = l3 - l2, m2 = l1 - l3, m3 = l2 - l1. The 4x4 determinant is
-16 A^2 of the projected triangle, the scaled 5x5 determinant +16 A^2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from src.angular.half_int import HalfInt
from src.errors import GeometryError
from src.exact.limit import limit_m_values
from src.geometry.volume import Real, _det

logger = logging.getLogger(__name__)

Label = Union[HalfInt, int, str, Fraction, float]


def _exact(values: Sequence[Real]) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def _edge(value: Label) -> Real:
    """Continuous edge j + 1/2; floats stay floats."""
    if isinstance(value, float):
        return value + 0.5
    return HalfInt.of(value).edge.value


def threej_caustic_det(J1: Real, J2: Real, J3: Real, m1: Real, m2: Real) -> Real:
    """
    Bordered 4x4 determinant defining the 3j caustic.

    Args:
        J1, J2, J3: Continuous edges
        m1, m2: Projections; m3 = -m1 - m2

    Returns:
        Determinant value, exact when every argument is int or Fraction
    """
    m3 = -m1 - m2
    a = J1 * J1 - m1 * m1
    b = J2 * J2 - m2 * m2
    c = J3 * J3 - m3 * m3
    rows = [
        [0, a, b, 1],
        [a, 0, c, 1],
        [b, c, 0, 1],
        [1, 1, 1, 0],
    ]
    return _det(rows, _exact((J1, J2, J3, m1, m2)))


def limit_det_scaled(J1: Real, J2: Real, J3: Real, L1: Real, L2: Real, L3: Real, R: Real) -> Real:
    """
    The 5x5 Cayley-Menger determinant with apex edges L_i + R, divided by 2 R^2.

    Raises:
        GeometryError: If R is not positive
    """
    if R <= 0:
        raise GeometryError(f"R must be positive, got {R}")
    a1, a2, a3 = (L1 + R) ** 2, (L2 + R) ** 2, (L3 + R) ** 2
    rows = [
        [0, a1, a2, a3, 1],
        [a1, 0, J3 * J3, J2 * J2, 1],
        [a2, J3 * J3, 0, J1 * J1, 1],
        [a3, J2 * J2, J1 * J1, 0, 1],
        [1, 1, 1, 1, 0],
    ]
    return _det(rows, _exact((J1, J2, J3, L1, L2, L3, R))) / (2 * R * R)


def limit_det_ratio(j1: Label, j2: Label, j3: Label, l1: Label, l2: Label, l3: Label, R: Real) -> Real:
    """
    Signed ratio of the scaled 5x5 determinant to the 3j caustic determinant.

    Args:
        j1, j2, j3: Upper row of the 3j symbol
        l1, l2, l3: Lower labels; projections are their differences
        R: Apex offset

    Returns:
        det5 / (2 R^2 det4), tending to -1

    Raises:
        GeometryError: If the 4x4 determinant vanishes or R <= 0
    """
    J1, J2, J3 = (_edge(v) for v in (j1, j2, j3))
    L1, L2, L3 = (_edge(v) for v in (l1, l2, l3))
    m1, m2, _ = limit_m_values(L1, L2, L3)
    det4 = threej_caustic_det(J1, J2, J3, m1, m2)
    if det4 == 0:
        raise GeometryError("3j caustic determinant is zero; ratio undefined")
    return limit_det_scaled(J1, J2, J3, L1, L2, L3, R) / det4


@dataclass(frozen=True)
class DetRow:
    """
    One row of a determinant-convergence table.

    Attributes:
        R: Apex offset
        scaled: det5 / (2 R^2)
        det4: 3j caustic determinant
        ratio: scaled / det4, None when det4 = 0
        error: | |ratio| - 1 |, or |scaled| when det4 = 0
    """
    R: int
    scaled: float
    det4: float
    ratio: Optional[float]
    error: float


def limit_det_table(j1: Label, j2: Label, j3: Label, l1: Label, l2: Label, l3: Label,
                    R_schedule: Sequence[int]) -> List[DetRow]:
    """
    Convergence of det5 / (2 R^2) towards the 3j caustic determinant.

    Returns:
        One DetRow per R; evaluated exactly for half-integer labels
    """
    J1, J2, J3 = (_edge(v) for v in (j1, j2, j3))
    L1, L2, L3 = (_edge(v) for v in (l1, l2, l3))
    m1, m2, _ = limit_m_values(L1, L2, L3)
    det4 = threej_caustic_det(J1, J2, J3, m1, m2)
    rows = []
    for R in R_schedule:
        scaled = limit_det_scaled(J1, J2, J3, L1, L2, L3, R)
        if det4 == 0:
            rows.append(DetRow(R=R, scaled=float(scaled), det4=0.0, ratio=None, error=abs(float(scaled))))
            continue
        ratio = scaled / det4
        rows.append(DetRow(R=R, scaled=float(scaled), det4=float(det4), ratio=float(ratio),
                           error=float(abs(abs(ratio) - 1))))
    logger.info(f"determinant limit for ({j1}, {j2}, {j3}; {l1}, {l2}, {l3}): {len(rows)} rows")
    return rows
