#!/usr/bin/env python3
"""
Regge symmetry of the 6j symbol.

    {j1 j2 j12; j3 j j23} = {j1+rho j2-rho j12; j3+rho j-rho j23}

with rho = [(j2 + j) - (j1 + j3)] / 2 and semi-perimeter s = (j1+j2+j3+j)/2,
so that s = rho + j1 + j3 = -rho + j2 + j. The transform leaves j12 and j23,
and therefore the screen bounds, unchanged; applying it twice is the identity.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels


@dataclass(frozen=True)
class ReggeData:
    """
    Regge shift and semi-perimeter.

    Attributes:
        rho: Shift [(j2 + j) - (j1 + j3)] / 2
        s: Semi-perimeter (j1 + j2 + j3 + j) / 2
    """
    rho: HalfInt
    s: HalfInt


def _rho_twice(t1: int, t2: int, t3: int, t: int) -> int:
    diff = (t2 + t) - (t1 + t3)
    if diff % 2:
        raise ValueError(f"odd total twice-value {t1 + t2 + t3 + t}; labels do not couple")
    return diff // 2


def regge_rho_quadruple(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike) -> ReggeData:
    """ReggeData from the four screen parameters alone."""
    h1, h2, h3, h = (HalfInt.of(v) for v in (j1, j2, j3, j))
    rho = HalfInt(_rho_twice(h1.twice, h2.twice, h3.twice, h.twice))
    s = HalfInt((h1.twice + h2.twice + h3.twice + h.twice) // 2)
    return ReggeData(rho=rho, s=s)


def regge_rho(labels: SixJLabels) -> ReggeData:
    """
    Regge shift and semi-perimeter of a symbol.

    Args:
        labels: Valid 6j labels

    Returns:
        ReggeData with s = rho + j1 + j3 = -rho + j2 + j
    """
    return regge_rho_quadruple(labels.j1, labels.j2, labels.j3, labels.j)


def regge_transform(labels: SixJLabels) -> SixJLabels:
    """
    Regge twin (j1+rho, j2-rho, j12, j3+rho, j-rho, j23).

    Args:
        labels: Valid 6j labels

    Returns:
        Twin labels with the same exact value
    """
    rho = regge_rho(labels).rho
    return SixJLabels(labels.j1 + rho, labels.j2 - rho, labels.j12,
                      labels.j3 + rho, labels.j - rho, labels.j23)


def regge_twin_quadruple(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike,
                         j: HalfIntLike) -> Tuple[HalfInt, HalfInt, HalfInt, HalfInt]:
    """Screen parameters of the Regge twin."""
    h1, h2, h3, h = (HalfInt.of(v) for v in (j1, j2, j3, j))
    rho = regge_rho_quadruple(h1, h2, h3, h).rho
    return h1 + rho, h2 - rho, h3 + rho, h - rho


def size_from_regge(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike) -> Fraction:
    """
    Screen size as 2 * min of the eight continuous edges of a symbol and its twin.

    The twin edges are J1+rho, J2-rho, J3+rho and J-rho.
    """
    h = [HalfInt.of(v) for v in (j1, j2, j3, j)]
    twin = regge_twin_quadruple(*h)
    return 2 * min(v.edge.value for v in (*h, *twin))
