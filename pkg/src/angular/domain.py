#!/usr/bin/env python3
"""
Allowed (j12, j23) domain of a 6j symbol, the "screen".

For fixed j1, j2, j3, j the recoupling labels run over

    j12 in [max(|j1-j2|, |j3-j|), min(j1+j2, j3+j)]
    j23 in [max(|j2-j3|, |j1-j|), min(j2+j3, j1+j)]

in unit steps. Both ranges have the same length. The continuous screen used by
the tetrahedron geometry spans [j12_min, j12_max + 1] in J12 = j12 + 1/2
units, i.e. the grid cells are centred on the quantum labels.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels
from src.errors import EmptyDomain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScreenDomain:
    """
    Bounds of the screen for fixed (j1, j2, j3, j).

    Attributes:
        j12_min: Smallest allowed j12
        j12_max: Largest allowed j12
        j23_min: Smallest allowed j23
        j23_max: Largest allowed j23
        size: Number of allowed values on each axis
    """
    j12_min: HalfInt
    j12_max: HalfInt
    j23_min: HalfInt
    j23_max: HalfInt
    size: int

    @property
    def x_bounds(self) -> Tuple[Fraction, Fraction]:
        """Continuous J12 bounds."""
        return self.j12_min.value, self.j12_max.value + 1

    @property
    def y_bounds(self) -> Tuple[Fraction, Fraction]:
        """Continuous J23 bounds."""
        return self.j23_min.value, self.j23_max.value + 1

    def j12_values(self) -> Iterator[HalfInt]:
        for k in range(self.size):
            yield HalfInt(self.j12_min.twice + 2 * k)

    def j23_values(self) -> Iterator[HalfInt]:
        for k in range(self.size):
            yield HalfInt(self.j23_min.twice + 2 * k)

    def contains(self, j12: HalfInt, j23: HalfInt) -> bool:
        return (self.j12_min <= j12 <= self.j12_max
                and self.j23_min <= j23 <= self.j23_max
                and (j12.twice - self.j12_min.twice) % 2 == 0
                and (j23.twice - self.j23_min.twice) % 2 == 0)


def _range(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt) -> Tuple[HalfInt, HalfInt]:
    lo = max(abs(a - b), abs(c - d))
    hi = min(a + b, c + d)
    return lo, hi


def screen_domain(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike) -> ScreenDomain:
    """
    Compute the exact screen bounds for four angular momenta.

    Args:
        j1: First momentum
        j2: Second momentum
        j3: Third momentum
        j: Fourth momentum (total)

    Returns:
        ScreenDomain with equal-size j12 and j23 ranges

    Raises:
        EmptyDomain: If no (j12, j23) pair is allowed
    """
    h1, h2, h3, h = (HalfInt.of(v) for v in (j1, j2, j3, j))
    if min(h1.twice, h2.twice, h3.twice, h.twice) < 0:
        raise EmptyDomain(f"negative momentum in ({h1}, {h2}, {h3}, {h})")
    if (h1.twice + h2.twice + h3.twice + h.twice) % 2:
        raise EmptyDomain(f"({h1}, {h2}, {h3}, {h}) has half-odd total, no coupling closes")

    j12_min, j12_max = _range(h1, h2, h3, h)
    j23_min, j23_max = _range(h2, h3, h1, h)
    if j12_min > j12_max or j23_min > j23_max:
        raise EmptyDomain(
            f"({h1}, {h2}, {h3}, {h}) admits no quadrilateral: "
            f"j12 in [{j12_min}, {j12_max}], j23 in [{j23_min}, {j23_max}]"
        )

    size = (j12_max.twice - j12_min.twice) // 2 + 1
    size23 = (j23_max.twice - j23_min.twice) // 2 + 1
    if size != size23:
        # Cannot happen once both ranges are nonempty.
        raise EmptyDomain(f"non-square screen {size}x{size23} for ({h1}, {h2}, {h3}, {h})")

    logger.debug(f"screen for ({h1}, {h2}, {h3}, {h}): size {size}")
    return ScreenDomain(j12_min=j12_min, j12_max=j12_max, j23_min=j23_min, j23_max=j23_max, size=size)


def screen_labels(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                  j12: HalfIntLike, j23: HalfIntLike) -> SixJLabels:
    """Assemble {j1 j2 j12; j3 j j23} from screen parameters and a grid point."""
    return SixJLabels.of(j1, j2, j12, j3, j, j23)
