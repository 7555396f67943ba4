#!/usr/bin/env python3
"""
3j symbols as limits of 6j symbols with three large entries.

    (j1 j2 j3; m1 m2 m3) ~ sqrt(2R+1) * {j1 j2 j3; l1+R l2+R l3+R},  R -> oo

with m1 = l3 - l2, m2 = l1 - l3, m3 = l2 - l1. The sqrt(2R+1) normalization
makes the scaled 6j converge to the 3j in magnitude; the relative phase is
reported per row rather than assumed. The alternative parametrization
m1 = F + D, m2 = F - D, Rbar = R + l3 - D corresponds to l = (F, -F, D).
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels, ThreeJLabels, triangle_ok
from src.errors import InvalidSchedule, LabelError
from src.exact.racah import sixj_exact, threej_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LimitRow:
    """
    One row of a 3j limit convergence table.

    Attributes:
        R: Shift applied to the lower row
        scaled: sqrt(2R+1) times the 6j value
        target: Exact 3j value as a float
        abs_error: | |scaled| - |target| |
        sign_match: Whether scaled and target share a sign (True when either is zero)
    """
    R: int
    scaled: float
    target: float
    abs_error: float
    sign_match: bool


def limit_m_values(l1: HalfInt, l2: HalfInt, l3: HalfInt) -> Tuple[HalfInt, HalfInt, HalfInt]:
    """Magnetic numbers (m1, m2, m3) implied by the lower-row offsets."""
    return l3 - l2, l1 - l3, l2 - l1


def limit_labels_from_fd(F: HalfIntLike, D: HalfIntLike) -> Tuple[HalfInt, HalfInt, HalfInt]:
    """
    Offsets (l1, l2, l3) for the (F, D) convention m1 = F+D, m2 = F-D.

    The 6j then reads {j1 j2 j3; R+F R-F R+D}.
    """
    hF, hD = HalfInt.of(F), HalfInt.of(D)
    return hF, -hF, hD


def threej_limit_estimate(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike,
                          l1: HalfIntLike, l2: HalfIntLike, l3: HalfIntLike,
                          R_schedule: Sequence[int]) -> List[LimitRow]:
    """
    Convergence table of sqrt(2R+1) * {j1 j2 j3; l1+R l2+R l3+R} towards the 3j.

    Args:
        j1, j2, j3: Upper row, must couple
        l1, l2, l3: Lower-row offsets; may be negative when R compensates
        R_schedule: Strictly increasing non-negative shifts

    Returns:
        One LimitRow per R

    Raises:
        LabelError: If (j1, j2, j3) do not couple or the implied m's are invalid
        InvalidSchedule: If R values are not strictly increasing or a 6j leaves the domain
    """
    h1, h2, h3 = (HalfInt.of(v) for v in (j1, j2, j3))
    o1, o2, o3 = (HalfInt.of(v) for v in (l1, l2, l3))
    if not triangle_ok(h1, h2, h3):
        raise LabelError(f"({h1}, {h2}, {h3}) do not couple")

    m1, m2, m3 = limit_m_values(o1, o2, o3)
    target_labels = ThreeJLabels(h1, h2, h3, m1, m2, m3)
    if not target_labels.is_valid():
        raise LabelError(f"3j selection rules fail for {target_labels}")

    schedule = list(R_schedule)
    if not schedule:
        raise InvalidSchedule("empty R schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise InvalidSchedule(f"R schedule must be strictly increasing: {schedule}")
    if schedule[0] < 0:
        raise InvalidSchedule(f"R must be non-negative: {schedule}")

    target = threej_exact(target_labels).to_float()
    rows: List[LimitRow] = []
    for R in schedule:
        shift = HalfInt.of(R)
        labels = SixJLabels(h1, h2, h3, o1 + shift, o2 + shift, o3 + shift)
        if not labels.is_valid():
            raise InvalidSchedule(f"R = {R} gives an invalid symbol {labels} ({labels.failed_triad()})")
        scaled = math.sqrt(2 * R + 1) * sixj_exact(labels).to_float()
        sign_match = scaled == 0.0 or target == 0.0 or (scaled > 0) == (target > 0)
        rows.append(LimitRow(R=R, scaled=scaled, target=target,
                             abs_error=abs(abs(scaled) - abs(target)), sign_match=sign_match))
        logger.debug(f"R={R}: scaled 6j {scaled:.12g}, 3j {target:.12g}")
    return rows
