#!/usr/bin/env python3
"""
Degeneracy flags and the Piero diagonal certificate.

Flags mark the linear configurations where two sums of opposite momenta agree:

    B: j1 + j = j2 + j3
    C: j1 + j2 = j3 + j
    D: j1 + j3 = j2 + j

Each flag sends the caustic into one screen corner. A diagonal (x <-> y)
symmetry of the screen is certified only when j1 = j3 or j2 = j, which is
exactly when the squared volume is symmetric under exchanging J12 and J23.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple

from src.angular.domain import screen_domain
from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels

FLAG_CORNERS: Dict[str, Tuple[str, str]] = {
    "B": ("min", "max"),
    "C": ("max", "min"),
    "D": ("min", "min"),
}


@dataclass(frozen=True)
class PieroCertificate:
    """
    Certificate that the screen is symmetric under j12 <-> j23.

    Attributes:
        equalities: Which column equalities hold, among "j1=j3" and "j2=j"
    """
    equalities: Tuple[str, ...]

    def __str__(self) -> str:
        return ", ".join(self.equalities)


def _quadruple(args: Tuple) -> Tuple[HalfInt, HalfInt, HalfInt, HalfInt]:
    if len(args) == 1 and isinstance(args[0], SixJLabels):
        labels = args[0]
        return labels.j1, labels.j2, labels.j3, labels.j
    if len(args) != 4:
        raise TypeError("expected SixJLabels or (j1, j2, j3, j)")
    return tuple(HalfInt.of(v) for v in args)  # type: ignore[return-value]


def degeneracy_flags(*args: HalfIntLike) -> FrozenSet[str]:
    """
    Linear-configuration flags of a symbol.

    Args:
        *args: Either SixJLabels or the four parameters (j1, j2, j3, j)

    Returns:
        Subset of {"B", "C", "D"}
    """
    j1, j2, j3, j = _quadruple(args)
    flags = set()
    if j1 + j == j2 + j3:
        flags.add("B")
    if j1 + j2 == j3 + j:
        flags.add("C")
    if j1 + j3 == j2 + j:
        flags.add("D")
    return frozenset(flags)


def piero_axis(*args: HalfIntLike) -> Optional[PieroCertificate]:
    """
    Diagonal-symmetry certificate.

    Args:
        *args: Either SixJLabels or the four parameters (j1, j2, j3, j)

    Returns:
        PieroCertificate naming j1=j3 and/or j2=j, or None
    """
    j1, j2, j3, j = _quadruple(args)
    equalities = []
    if j1 == j3:
        equalities.append("j1=j3")
    if j2 == j:
        equalities.append("j2=j")
    return PieroCertificate(tuple(equalities)) if equalities else None


def corner_points(*args: HalfIntLike) -> Dict[str, Tuple[Fraction, Fraction]]:
    """
    Screen corners where the caustic touches for each degeneracy flag.

    B -> (J12 min, J23 max), C -> (J12 max, J23 min), D -> (J12 min, J23 min),
    in continuous units.

    Returns:
        Mapping flag -> (x, y) for the flags that hold
    """
    j1, j2, j3, j = _quadruple(args)
    domain = screen_domain(j1, j2, j3, j)
    xs = dict(zip(("min", "max"), domain.x_bounds))
    ys = dict(zip(("min", "max"), domain.y_bounds))
    return {
        flag: (xs[FLAG_CORNERS[flag][0]], ys[FLAG_CORNERS[flag][1]])
        for flag in sorted(degeneracy_flags(j1, j2, j3, j))
    }
