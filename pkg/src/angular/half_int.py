#!/usr/bin/env python3
"""
Exact half-integer angular momenta.

Every label is stored as the integer 2j so that integer and half-odd spins are
handled without floating point. Parity checks throughout the package are mod-2
tests on these twice-values.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.errors import LabelError

HalfIntLike = Union["HalfInt", int, str, Fraction, float]


@dataclass(frozen=True, order=True)
class HalfInt:
    """
    A half-integer j stored as twice = 2j.

    Attributes:
        twice: Twice the value; any integer, physical labels need twice >= 0
    """
    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise LabelError(f"twice-value must be an integer, got {self.twice!r}")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """
        Parse "n" or "n/2" into a HalfInt.

        Args:
            text: Label text such as "3", "-5" or "7/2"

        Returns:
            Parsed HalfInt

        Raises:
            LabelError: If the text is not an integer or an n/2 fraction
        """
        raw = text.strip()
        try:
            if "/" in raw:
                numerator, denominator = raw.split("/", 1)
                if int(denominator) != 2:
                    raise LabelError(f"only halves are allowed, got {text!r}")
                return cls(int(numerator))
            return cls(2 * int(raw))
        except ValueError as e:
            raise LabelError(f"cannot parse angular momentum label {text!r}") from e

    @classmethod
    def of(cls, value: HalfIntLike) -> "HalfInt":
        """Coerce an int, string, Fraction, float or HalfInt into a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise LabelError(f"not an angular momentum: {value!r}")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            return cls.parse(value)
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise LabelError(f"{value!r} is not a multiple of 1/2")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        """Exact rational value j."""
        return Fraction(self.twice, 2)

    @property
    def edge(self) -> "HalfInt":
        """Continuous tetrahedron edge J = j + 1/2."""
        return HalfInt(self.twice + 1)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        """
        Integer value, for labels known to be integral.

        Raises:
            LabelError: If the value is half-odd
        """
        if self.twice % 2:
            raise LabelError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __radd__(self, other: "HalfInt") -> "HalfInt":
        return self.__add__(other)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def half(value: HalfIntLike) -> HalfInt:
    """Shorthand for HalfInt.of."""
    return HalfInt.of(value)
