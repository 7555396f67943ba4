#!/usr/bin/env python3
"""
Memoized bignum factorials and their prime factorizations.

The table grows lazily under a lock and is capped; readers never observe a
partially extended table. Prime exponents of n! come from Legendre's formula,
which lets radicands of products of factorials be split into square and
squarefree parts without factoring large integers.
"""

import logging
import threading
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import primerange

from src.errors import FactorialCapExceeded

logger = logging.getLogger(__name__)

FACTORIAL_CAP = 4000

_table: List[int] = [1]
_lock = threading.Lock()
_cap = FACTORIAL_CAP


def set_factorial_cap(cap: int) -> None:
    """Change the largest n accepted by factorial and factorial_exponents."""
    global _cap
    if int(cap) != cap or cap < 1:
        raise ValueError(f"factorial cap must be a positive integer, got {cap}")
    _cap = int(cap)
    logger.debug(f"factorial cap set to {_cap}")


def get_factorial_cap() -> int:
    return _cap


def _check(n: int) -> None:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n > _cap:
        raise FactorialCapExceeded(f"{n}! exceeds the table cap {_cap}!")


def factorial(n: int) -> int:
    """
    Exact n! from the shared table.

    Args:
        n: Non-negative integer not above the current cap

    Returns:
        n! as a Python int

    Raises:
        FactorialCapExceeded: If n exceeds the cap
        ValueError: If n is negative
    """
    _check(n)
    table = _table
    if n < len(table):
        return table[n]
    with _lock:
        # Extend a copy, then publish it in one assignment.
        grown = list(_table)
        while len(grown) <= n:
            grown.append(grown[-1] * len(grown))
        _set_table(grown)
        logger.debug(f"factorial table extended to {len(grown) - 1}!")
        return grown[n]


def _set_table(table: List[int]) -> None:
    global _table
    _table = table


@lru_cache(maxsize=None)
def primes_upto(n: int) -> Tuple[int, ...]:
    return tuple(int(p) for p in primerange(2, n + 1))


def factorial_exponents(n: int) -> Tuple[Tuple[int, int], ...]:
    """
    Prime factorization of n! by Legendre's formula.

    Returns:
        Tuple of (prime, exponent) pairs for every prime p <= n
    """
    _check(n)
    return _legendre_exponents(n)


@lru_cache(maxsize=8192)
def _legendre_exponents(n: int) -> Tuple[Tuple[int, int], ...]:
    result = []
    for p in primes_upto(n):
        e, q = 0, n
        while q:
            q //= p
            e += q
        result.append((p, e))
    return tuple(result)


def factorial_ratio_exponents(numerator: List[int], denominator: List[int]) -> Dict[int, int]:
    """
    Prime exponents of prod(a!)/prod(b!) over the given arguments.

    Args:
        numerator: Arguments whose factorials multiply
        denominator: Arguments whose factorials divide

    Returns:
        Mapping prime -> signed exponent, zero exponents dropped
    """
    exps: Dict[int, int] = {}
    for n in numerator:
        for p, e in factorial_exponents(n):
            exps[p] = exps.get(p, 0) + e
    for n in denominator:
        for p, e in factorial_exponents(n):
            exps[p] = exps.get(p, 0) - e
    return {p: e for p, e in exps.items() if e}
