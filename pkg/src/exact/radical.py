#!/usr/bin/env python3
"""
Exact values of the form r * sqrt(d).

Every 6j and 3j symbol is a rational sum times the square root of a rational
product of factorials. ExactRadical keeps r as a Fraction and d as a squarefree
positive integer, so equal values always compare equal and hash alike.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from sympy import factorint

Rational = Union[int, Fraction]


def _squarefree_split(n: int) -> "tuple[int, int]":
    """Return (s, d) with n = s*s*d and d squarefree."""
    if n == 0:
        return 0, 1
    s, d = 1, 1
    for p, e in factorint(n).items():
        s *= int(p) ** (e // 2)
        if e % 2:
            d *= int(p)
    return s, d


@dataclass(frozen=True)
class ExactRadical:
    """
    The exact number r * sqrt(d).

    Attributes:
        r: Rational coefficient
        d: Squarefree positive integer; 1 when r is zero
    """
    r: Fraction
    d: int = 1

    def __post_init__(self):
        if not isinstance(self.r, Fraction):
            object.__setattr__(self, "r", Fraction(self.r))
        if self.d < 1:
            raise ValueError(f"radicand must be a positive squarefree integer, got {self.d}")
        if self.r == 0 and self.d != 1:
            object.__setattr__(self, "d", 1)

    @classmethod
    def zero(cls) -> "ExactRadical":
        return cls(Fraction(0), 1)

    @classmethod
    def from_sqrt(cls, coefficient: Rational, radicand: Rational) -> "ExactRadical":
        """
        Normalize coefficient * sqrt(radicand) for a non-negative rational radicand.

        Uses integer factorization, so keep radicands modest; exact evaluation of
        large symbols goes through from_prime_powers instead.
        """
        q = Fraction(radicand)
        if q < 0:
            raise ValueError(f"negative radicand {q}")
        c = Fraction(coefficient)
        if q == 0 or c == 0:
            return cls.zero()
        # sqrt(n/m) = sqrt(n*m)/m
        s, d = _squarefree_split(q.numerator * q.denominator)
        return cls(c * s / q.denominator, d)

    @classmethod
    def from_prime_powers(cls, coefficient: Rational, exponents: Dict[int, int]) -> "ExactRadical":
        """
        Build coefficient * sqrt(prod p**e) from a prime factorization.

        Args:
            coefficient: Rational prefactor
            exponents: Mapping prime -> signed exponent of the radicand

        Returns:
            Normalized ExactRadical
        """
        c = Fraction(coefficient)
        if c == 0:
            return cls.zero()
        num, den, d = 1, 1, 1
        for p, e in exponents.items():
            q, rem = divmod(e, 2)
            if q > 0:
                num *= p ** q
            elif q < 0:
                den *= p ** (-q)
            if rem:
                d *= p
        return cls(c * Fraction(num, den), d)

    @property
    def sign(self) -> int:
        return (self.r > 0) - (self.r < 0)

    def is_zero(self) -> bool:
        return self.r == 0

    def square(self) -> Fraction:
        """Exact value squared, r**2 * d."""
        return self.r * self.r * self.d

    def __neg__(self) -> "ExactRadical":
        return ExactRadical(-self.r, self.d)

    def __mul__(self, other: Union["ExactRadical", Rational]) -> "ExactRadical":
        if not isinstance(other, ExactRadical):
            return ExactRadical(self.r * Fraction(other), self.d)
        if self.is_zero() or other.is_zero():
            return ExactRadical.zero()
        # Both radicands squarefree: d1*d2 = g^2 * (d1/g)*(d2/g) with a squarefree cofactor.
        g = math.gcd(self.d, other.d)
        return ExactRadical(self.r * other.r * g, (self.d // g) * (other.d // g))

    __rmul__ = __mul__

    def __add__(self, other: "ExactRadical") -> "ExactRadical":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.d != other.d:
            raise ValueError(f"cannot add radicals with different radicands {self.d} and {other.d}")
        return ExactRadical(self.r + other.r, self.d)

    def to_float(self) -> float:
        """
        Convert to the nearest double.

        The square root is taken on the exact rational r**2 * d with integer
        isqrt at 64 extra bits, then scaled with ldexp, which keeps the result
        within 2 ulp for magnitudes in [1e-300, 1e300].
        """
        if self.r == 0:
            return 0.0
        sq = self.square()
        n, m = sq.numerator, sq.denominator
        k = (m.bit_length() - n.bit_length()) // 2 + 64
        if k >= 0:
            s = math.isqrt((n << (2 * k)) // m)
        else:
            s = math.isqrt(n // (m << (-2 * k)))
        return math.copysign(math.ldexp(float(s), -k), self.r)

    def __float__(self) -> float:
        return self.to_float()

    def __str__(self) -> str:
        return f"{self.r} * sqrt({self.d})"
