#!/usr/bin/env python3
"""
Classification of screen points by tetrahedron geometry.

Region follows the sign of V^2: positive inside the caustic (classical,
oscillatory 6j), near zero on it (flat tetrahedra), negative outside
(forbidden, evanescent 6j). Flat and outside points are further typed by the
planar quadrilateral they degenerate to, using the two ridges as axes:
above both ridges convex, above exactly one concave, below both crossed.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

import numpy as np

from src.geometry.caustics import ScreenParams

logger = logging.getLogger(__name__)

CLASSICAL = "classical_inside"
FLAT = "flat_on_caustic"
FORBIDDEN = "forbidden_outside"

REGIONS = (CLASSICAL, FLAT, FORBIDDEN)
QUADRILATERALS = ("convex", "concave", "crossed", "none")


@dataclass(frozen=True)
class ConfigClass:
    """
    Geometric class of a screen point.

    Attributes:
        region: classical_inside, flat_on_caustic or forbidden_outside
        quadrilateral: convex, concave, crossed, or none for classical points
    """
    region: str
    quadrilateral: str


def quadrilateral_type(x: float, y: float, params: ScreenParams) -> str:
    """
    Quadrant of (x, y) relative to the ridges.

    A point is above a ridge when V^2 decreases across it in the squared
    coordinate. Where a ridge radicand is negative the whole line lies above it.
    """
    dX, dY = params.polynomial().partials_squared(float(x), float(y))
    above_x, above_y = bool(dX < 0), bool(dY < 0)
    if above_x and above_y:
        return "convex"
    if above_x or above_y:
        return "concave"
    return "crossed"


def classify_point(x: float, y: float, params: ScreenParams, caustic_rel: float = 1e-9) -> ConfigClass:
    """
    Classify a point of the continuous screen.

    Args:
        x: J12 value
        y: J23 value
        params: Screen description
        caustic_rel: On-caustic tolerance relative to (max edge)^6

    Returns:
        ConfigClass with region and quadrilateral type
    """
    v2 = float(params.polynomial().value(x, y)) / 144
    tol = caustic_rel * max(params.scale, abs(x), abs(y)) ** 6
    if abs(v2) <= tol:
        region = FLAT
    elif v2 > 0:
        region = CLASSICAL
    else:
        region = FORBIDDEN
    quad = "none" if region == CLASSICAL else quadrilateral_type(x, y, params)
    return ConfigClass(region=region, quadrilateral=quad)


def classify_screen(params: ScreenParams, xs: Sequence[float], ys: Sequence[float],
                    caustic_rel: float = 1e-9) -> Dict[str, float]:
    """
    Fractions of grid points in each region.

    Args:
        params: Screen description
        xs: J12 grid values
        ys: J23 grid values

    Returns:
        Mapping region -> fraction of the len(xs) * len(ys) points
    """
    gx, gy = np.meshgrid(np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), indexing="ij")
    v2 = params.polynomial().value(gx, gy) / 144
    tol = caustic_rel * max(params.scale, float(np.max(gx)), float(np.max(gy))) ** 6
    total = v2.size
    flat = np.abs(v2) <= tol
    counts = {
        CLASSICAL: int(np.count_nonzero((v2 > 0) & ~flat)),
        FLAT: int(np.count_nonzero(flat)),
        FORBIDDEN: int(np.count_nonzero((v2 < 0) & ~flat)),
    }
    logger.info(f"screen regions: {counts}")
    return {k: v / total for k, v in counts.items()}


def sign_changes(values: Sequence[float], floor: float = 0.0) -> int:
    """Number of sign changes along a sequence, ignoring entries with |v| <= floor."""
    signs = [np.sign(v) for v in values if abs(v) > floor]
    return int(sum(1 for a, b in zip(signs, signs[1:]) if a != b))


def monotone_decay(values: Sequence[float], towards_end: bool = True) -> bool:
    """
    Whether |values| decreases strictly towards one end.

    Args:
        values: Sequence ordered along a screen line
        towards_end: Check decay towards the last entry, else towards the first
    """
    mags = np.abs(np.asarray(values, dtype=float))
    if not towards_end:
        mags = mags[::-1]
    return bool(np.all(np.diff(mags) < 0))


def first_region_index(regions: Sequence[str], region: str) -> Optional[int]:
    for k, r in enumerate(regions):
        if r == region:
            return k
    return None
