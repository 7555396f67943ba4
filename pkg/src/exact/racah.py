#!/usr/bin/env python3
"""
Exact 6j and 3j symbols from Racah's single-sum formulas.

Both symbols are evaluated as an exact rational sum times the square root of a
product of factorials. The square root is normalized through the prime
exponents of the factorials, so no large integer is ever factored.

For {a b c; d e f} = {j1 j2 j12; j3 j j23}:

    sqrt(D(abc) D(aef) D(dbf) D(dec)) * sum_z (-1)^z (z+1)! /
        [prod_i (z - alpha_i)! * prod_k (beta_k - z)!]

with D(xyz) = (x+y-z)!(x-y+z)!(-x+y+z)!/(x+y+z+1)!, alpha the four triad sums
and beta the three pairwise sums of opposite-edge pairs.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.angular.labels import SixJLabels, ThreeJLabels
from src.exact.factorials import factorial, factorial_ratio_exponents
from src.exact.radical import ExactRadical

logger = logging.getLogger(__name__)


def _int(twice_sum: int) -> int:
    # Callers only pass sums whose parity the triangle rule already fixed.
    assert twice_sum % 2 == 0, twice_sum
    return twice_sum // 2


def _delta_args(ta: int, tb: int, tc: int) -> Tuple[List[int], List[int]]:
    """Factorial arguments of D(abc): numerator and denominator lists."""
    return (
        [_int(ta + tb - tc), _int(ta - tb + tc), _int(-ta + tb + tc)],
        [_int(ta + tb + tc) + 1],
    )


def racah_sum(alphas: List[int], betas: List[int]) -> Fraction:
    """
    The alternating single sum of the 6j formula.

    Args:
        alphas: The four triad sums
        betas: The three opposite-pair sums

    Returns:
        Exact value of sum_z (-1)^z (z+1)! / [prod (z-alpha)! prod (beta-z)!]
    """
    zmin, zmax = max(alphas), min(betas)
    total = Fraction(0)
    for z in range(zmin, zmax + 1):
        den = 1
        for a in alphas:
            den *= factorial(z - a)
        for b in betas:
            den *= factorial(b - z)
        term = Fraction(factorial(z + 1), den)
        total += -term if z % 2 else term
    return total


def sixj_exact(labels: SixJLabels) -> ExactRadical:
    """
    Exact value of {j1 j2 j12; j3 j j23}.

    Args:
        labels: The six entries

    Returns:
        ExactRadical value; exact zero when any triangle condition fails
    """
    if not labels.is_valid():
        return ExactRadical.zero()

    ta, tb, tc, td, te, tf = labels.twice
    triads = [(ta, tb, tc), (ta, te, tf), (td, tb, tf), (td, te, tc)]

    numerator: List[int] = []
    denominator: List[int] = []
    for triad in triads:
        num, den = _delta_args(*triad)
        numerator.extend(num)
        denominator.extend(den)

    alphas = [_int(sum(t)) for t in triads]
    betas = [_int(ta + tb + td + te), _int(tb + tc + te + tf), _int(tc + ta + tf + td)]

    total = racah_sum(alphas, betas)
    return ExactRadical.from_prime_powers(total, factorial_ratio_exponents(numerator, denominator))


def sixj(j1, j2, j12, j3, j, j23) -> ExactRadical:
    """Convenience wrapper taking six HalfInt-coercible entries in symbol order."""
    return sixj_exact(SixJLabels.of(j1, j2, j12, j3, j, j23))


def threej_exact(labels: ThreeJLabels) -> ExactRadical:
    """
    Exact value of the 3j symbol (j1 j2 j3; m1 m2 m3).

    Args:
        labels: The six entries

    Returns:
        ExactRadical value; exact zero when a selection rule fails
    """
    if not labels.is_valid():
        return ExactRadical.zero()

    t1, t2, t3 = labels.j1.twice, labels.j2.twice, labels.j3.twice
    u1, u2, u3 = labels.m1.twice, labels.m2.twice, labels.m3.twice

    num, den = _delta_args(t1, t2, t3)
    num = num + [_int(t1 + u1), _int(t1 - u1), _int(t2 + u2), _int(t2 - u2), _int(t3 + u3), _int(t3 - u3)]

    a1 = _int(t3 - t2 + u1)    # j3 - j2 + m1
    a2 = _int(t3 - t1 - u2)    # j3 - j1 - m2
    b1 = _int(t1 + t2 - t3)    # j1 + j2 - j3
    b2 = _int(t1 - u1)         # j1 - m1
    b3 = _int(t2 + u2)         # j2 + m2
    kmin = max(0, -a1, -a2)
    kmax = min(b1, b2, b3)

    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        d = (factorial(k) * factorial(a1 + k) * factorial(a2 + k)
             * factorial(b1 - k) * factorial(b2 - k) * factorial(b3 - k))
        term = Fraction(1, d)
        total += -term if k % 2 else term

    # (-1)^(j1 - j2 - m3)
    if _int(t1 - t2 - u3) % 2:
        total = -total
    return ExactRadical.from_prime_powers(total, factorial_ratio_exponents(num, den))


def threej(j1, j2, j3, m1, m2, m3=None) -> ExactRadical:
    """Convenience wrapper; m3 defaults to -m1-m2."""
    return threej_exact(ThreeJLabels.of(j1, j2, j3, m1, m2, m3))

