#!/usr/bin/env python3
"""
Label records for 6j and 3j symbols and the triangle rule.

SixJLabels holds {j1 j2 j12; j3 j j23}. Its four triads are (j1, j2, j12),
(j3, j, j12), (j1, j, j23) and (j3, j2, j23); opposite tetrahedron edges are
the column pairs (j1, j3), (j2, j) and (j12, j23).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from src.angular.half_int import HalfInt, HalfIntLike
from src.errors import LabelError

TRIAD_NAMES: Tuple[str, ...] = ("j1 j2 j12", "j3 j j12", "j1 j j23", "j3 j2 j23")


def triangle_ok(a: HalfIntLike, b: HalfIntLike, c: HalfIntLike) -> bool:
    """
    Check the angular momentum coupling rule for a triad.

    Args:
        a: First momentum
        b: Second momentum
        c: Third momentum

    Returns:
        True iff |a-b| <= c <= a+b and a+b+c is an integer
    """
    ta, tb, tc = HalfInt.of(a).twice, HalfInt.of(b).twice, HalfInt.of(c).twice
    if ta < 0 or tb < 0 or tc < 0:
        return False
    if (ta + tb + tc) % 2:
        return False
    return abs(ta - tb) <= tc <= ta + tb


@dataclass(frozen=True)
class SixJLabels:
    """The six entries {j1 j2 j12; j3 j j23} of a 6j symbol."""
    j1: HalfInt
    j2: HalfInt
    j12: HalfInt
    j3: HalfInt
    j: HalfInt
    j23: HalfInt

    @classmethod
    def of(cls, j1: HalfIntLike, j2: HalfIntLike, j12: HalfIntLike,
           j3: HalfIntLike, j: HalfIntLike, j23: HalfIntLike) -> "SixJLabels":
        """Build labels from anything HalfInt.of accepts, in symbol order."""
        return cls(*(HalfInt.of(v) for v in (j1, j2, j12, j3, j, j23)))

    @classmethod
    def from_twice(cls, twice: Tuple[int, ...]) -> "SixJLabels":
        return cls(*(HalfInt(t) for t in twice))

    @property
    def twice(self) -> Tuple[int, int, int, int, int, int]:
        """Twice-values in symbol order (j1, j2, j12, j3, j, j23)."""
        return (self.j1.twice, self.j2.twice, self.j12.twice,
                self.j3.twice, self.j.twice, self.j23.twice)

    def rows(self) -> Tuple[Tuple[HalfInt, HalfInt, HalfInt], Tuple[HalfInt, HalfInt, HalfInt]]:
        return (self.j1, self.j2, self.j12), (self.j3, self.j, self.j23)

    def triads(self) -> List[Tuple[HalfInt, HalfInt, HalfInt]]:
        return [
            (self.j1, self.j2, self.j12),
            (self.j3, self.j, self.j12),
            (self.j1, self.j, self.j23),
            (self.j3, self.j2, self.j23),
        ]

    def failed_triad(self) -> Optional[str]:
        """Name of the first triad violating the triangle rule, or None."""
        for name, triad in zip(TRIAD_NAMES, self.triads()):
            if not triangle_ok(*triad):
                return name
        return None

    def is_valid(self) -> bool:
        return self.failed_triad() is None

    def edges(self) -> Tuple[Fraction, ...]:
        """Continuous edges J = j + 1/2 in symbol order."""
        return tuple(v.edge.value for v in (self.j1, self.j2, self.j12, self.j3, self.j, self.j23))

    def __str__(self) -> str:
        return f"{{{self.j1} {self.j2} {self.j12}; {self.j3} {self.j} {self.j23}}}"


@dataclass(frozen=True)
class ThreeJLabels:
    """The entries (j1 j2 j3; m1 m2 m3) of a 3j symbol."""
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    m1: HalfInt
    m2: HalfInt
    m3: HalfInt

    @classmethod
    def of(cls, j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike,
           m1: HalfIntLike, m2: HalfIntLike, m3: Optional[HalfIntLike] = None) -> "ThreeJLabels":
        """Build labels; m3 defaults to -m1-m2."""
        hm1, hm2 = HalfInt.of(m1), HalfInt.of(m2)
        hm3 = -(hm1 + hm2) if m3 is None else HalfInt.of(m3)
        return cls(HalfInt.of(j1), HalfInt.of(j2), HalfInt.of(j3), hm1, hm2, hm3)

    @classmethod
    def from_twice(cls, twice: Tuple[int, ...]) -> "ThreeJLabels":
        return cls(*(HalfInt(t) for t in twice))

    def pairs(self) -> Iterator[Tuple[HalfInt, HalfInt]]:
        yield self.j1, self.m1
        yield self.j2, self.m2
        yield self.j3, self.m3

    def is_valid(self) -> bool:
        """Triangle rule, m-sum rule, |m| <= j and matching j/m parity."""
        if not triangle_ok(self.j1, self.j2, self.j3):
            return False
        if self.m1.twice + self.m2.twice + self.m3.twice != 0:
            return False
        for j, m in self.pairs():
            if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
                return False
        return True

    def __str__(self) -> str:
        return f"({self.j1} {self.j2} {self.j3}; {self.m1} {self.m2} {self.m3})"


def parse_labels(texts: List[str]) -> List[HalfInt]:
    """
    Parse a list of label strings.

    Raises:
        LabelError: If any entry cannot be parsed
    """
    if not texts:
        raise LabelError("no labels given")
    return [HalfInt.parse(t) for t in texts]
