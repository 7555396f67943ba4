#!/usr/bin/env python3
"""
Brute-force 6j oracle by contraction of four 3j symbols.

    {j1 j2 j3; j4 j5 j6} = sum_m (-1)^S (j1 j2 j3; -m1 -m2 -m3)(j1 j5 j6; m1 -m5 m6)
                                       (j4 j2 j6; m4 m2 -m6)(j4 j5 j3; -m4 m5 m3)

with S = sum_k (j_k - m_k). The m-sum rules fix m3, m6 and m4 from m1, m2, m5,
so the loop runs over three magnetic numbers. The 3j factors come from the
independent term-by-term Racah sum; terms are grouped by squarefree radicand
and must collapse to a single radical.

Only for tests: the loop is cubic in 2j+1.
"""

import logging
from functools import lru_cache
from typing import Dict, Tuple

from src.angular.labels import SixJLabels, ThreeJLabels
from src.errors import OracleRangeExceeded
from src.exact.racah import threej_exact
from src.exact.radical import ExactRadical

logger = logging.getLogger(__name__)

ORACLE_MAX_TWICE = 20


@lru_cache(maxsize=200_000)
def _threej_twice(t1: int, t2: int, t3: int, u1: int, u2: int, u3: int) -> ExactRadical:
    return threej_exact(ThreeJLabels.from_twice((t1, t2, t3, u1, u2, u3)))


def _m_values(t: int):
    return range(-t, t + 1, 2)


def sixj_oracle_cg(labels: SixJLabels) -> ExactRadical:
    """
    Evaluate a 6j symbol by summing products of 3j symbols.

    Args:
        labels: The six entries, each at most 10

    Returns:
        Exact value, identical to sixj_exact

    Raises:
        OracleRangeExceeded: If any entry exceeds 10
    """
    if max(labels.twice) > ORACLE_MAX_TWICE:
        raise OracleRangeExceeded(f"oracle is limited to entries <= {ORACLE_MAX_TWICE // 2}, got {labels}")
    if not labels.is_valid():
        return ExactRadical.zero()

    t1, t2, t3, t4, t5, t6 = labels.twice
    groups: Dict[int, ExactRadical] = {}

    for u1 in _m_values(t1):
        for u2 in _m_values(t2):
            u3 = -u1 - u2
            if abs(u3) > t3:
                continue
            for u5 in _m_values(t5):
                u6 = u5 - u1
                if abs(u6) > t6:
                    continue
                u4 = u6 - u2
                if abs(u4) > t4:
                    continue
                term = (_threej_twice(t1, t2, t3, -u1, -u2, -u3)
                        * _threej_twice(t1, t5, t6, u1, -u5, u6)
                        * _threej_twice(t4, t2, t6, u4, u2, -u6)
                        * _threej_twice(t4, t5, t3, -u4, u5, u3))
                if term.is_zero():
                    continue
                phase = (t1 + t2 + t3 + t4 + t5 + t6 - (u1 + u2 + u3 + u4 + u5 + u6)) // 2
                if phase % 2:
                    term = -term
                groups[term.d] = groups.get(term.d, ExactRadical.zero()) + term

    nonzero = [v for v in groups.values() if not v.is_zero()]
    if not nonzero:
        return ExactRadical.zero()
    if len(nonzero) > 1:
        # A valid contraction always collapses to one radicand.
        raise ArithmeticError(f"oracle sum for {labels} did not collapse: radicands {sorted(groups)}")
    return nonzero[0]
