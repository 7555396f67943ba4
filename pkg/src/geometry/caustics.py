#!/usr/bin/env python3
"""
Caustic curves (V = 0) and sampled polylines on the screen.

Along a line J23 = y the squared volume vanishes at

    x_z^2 = x_Vmax^2 +/- 12 V_max,x / y

and the two roots bracket the ridge. Over the continuous J23 range both face
triangles sharing y exist, so the roots are real distances and the closed
ovaloid touches the top and bottom screen edges where one face collapses.

Samplers march y over Chebyshev nodes, which cluster at those tangency ends.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import FrozenSet, List, Tuple

import numpy as np

from src.angular.domain import screen_domain
from src.angular.half_int import HalfInt, HalfIntLike
from src.errors import NoRoot, OutOfScreen
from src.geometry.ridges import ridge_x, ridge_x_squared, ridge_y, ridge_y_squared, vmax_along_x, vmax_along_y
from src.geometry.volume import Real, ScreenPolynomial
from src.symmetry.flags import corner_points, degeneracy_flags

logger = logging.getLogger(__name__)

ROOT_TOL = 1e-12
Y_FLOOR = 1e-7


@dataclass(frozen=True)
class CausticRoots:
    """
    Crossings of the caustic with a screen line.

    Attributes:
        roots: Ascending roots (one value at a tangency)
        tangent: True when the two roots coincide
    """
    roots: Tuple[float, ...]
    tangent: bool


@dataclass(frozen=True)
class ScreenParams:
    """
    Continuous description of a screen for fixed (j1, j2, j3, j).

    Attributes:
        J1, J2, J3, J: Continuous edges j + 1/2
        x_bounds: Continuous J12 range
        y_bounds: Continuous J23 range
        flags: Degeneracy flags of the quadruple
    """
    J1: float
    J2: float
    J3: float
    J: float
    x_bounds: Tuple[float, float]
    y_bounds: Tuple[float, float]
    flags: FrozenSet[str] = frozenset()

    @classmethod
    def from_labels(cls, j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike) -> "ScreenParams":
        domain = screen_domain(j1, j2, j3, j)
        h = [HalfInt.of(v) for v in (j1, j2, j3, j)]
        return cls(
            J1=float(h[0].edge), J2=float(h[1].edge), J3=float(h[2].edge), J=float(h[3].edge),
            x_bounds=tuple(float(v) for v in domain.x_bounds),
            y_bounds=tuple(float(v) for v in domain.y_bounds),
            flags=degeneracy_flags(*h),
        )

    @property
    def edges(self) -> Tuple[float, float, float, float]:
        return self.J1, self.J2, self.J3, self.J

    @property
    def scale(self) -> float:
        """Largest continuous length on the screen."""
        return max(self.J1, self.J2, self.J3, self.J, self.x_bounds[1], self.y_bounds[1])

    def polynomial(self) -> ScreenPolynomial:
        return ScreenPolynomial.from_edges(*self.edges)


@dataclass(frozen=True)
class CurveSample:
    """
    A sampled curve on the screen.

    Attributes:
        kind: "caustic", "ridge_x" or "ridge_y"
        points: Array of shape (n, 2) with columns (x = J12, y = J23)
        branches: Per-point branch tag, "minus" or "plus"
        residuals: Per-point defining residual (V^2, or the transverse derivative for ridges)
        closed: Whether the polyline is closed
        gaps: Number of sample lines where no point could be placed
        flags: Degeneracy flags of the screen
    """
    kind: str
    points: np.ndarray
    branches: Tuple[str, ...]
    residuals: np.ndarray
    closed: bool = False
    gaps: int = 0
    flags: FrozenSet[str] = frozenset()
    corners: Tuple[Tuple[str, float, float], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.points)


def _roots(center: float, delta: float, scale2: float) -> CausticRoots:
    lo, hi = center - delta, center + delta
    if hi < -ROOT_TOL * scale2:
        raise NoRoot(f"both caustic radicands negative ({lo:.6g}, {hi:.6g})")
    hi = max(hi, 0.0)
    if delta <= ROOT_TOL * scale2:
        return CausticRoots(roots=(float(np.sqrt(hi)),), tangent=True)
    if lo < 0:
        if lo < -ROOT_TOL * scale2:
            return CausticRoots(roots=(float(np.sqrt(hi)),), tangent=False)
        lo = 0.0
    return CausticRoots(roots=(float(np.sqrt(lo)), float(np.sqrt(hi))), tangent=False)


def caustic_roots_x(y: float, J1: Real, J2: Real, J3: Real, J: Real) -> CausticRoots:
    """
    Caustic crossings with the line J23 = y.

    Args:
        y: Line position, inside the continuous J23 range
        J1, J2, J3, J: Continuous edges

    Returns:
        Sorted roots in x, deduplicated at tangency

    Raises:
        NoRoot: If the line misses the caustic
    """
    try:
        vmax = vmax_along_x(y, J1, J2, J3, J)
    except OutOfScreen as e:
        raise NoRoot(str(e)) from e
    center = ridge_x_squared(y, J1, J2, J3, J)
    scale = max(abs(float(v)) for v in (J1, J2, J3, J, y))
    return _roots(center, 12 * vmax / abs(float(y)), scale * scale)


def caustic_roots_y(x: float, J1: Real, J2: Real, J3: Real, J: Real) -> CausticRoots:
    """
    Caustic crossings with the line J12 = x.

    Raises:
        NoRoot: If the line misses the caustic
    """
    try:
        vmax = vmax_along_y(x, J1, J2, J3, J)
    except OutOfScreen as e:
        raise NoRoot(str(e)) from e
    center = ridge_y_squared(x, J1, J2, J3, J)
    scale = max(abs(float(v)) for v in (J1, J2, J3, J, x))
    return _roots(center, 12 * vmax / abs(float(x)), scale * scale)


def chebyshev_nodes(lo: float, hi: float, n: int) -> np.ndarray:
    """n Chebyshev-Lobatto nodes on [lo, hi], endpoints included, ascending."""
    k = np.arange(n)
    return 0.5 * (lo + hi) - 0.5 * (hi - lo) * np.cos(np.pi * k / (n - 1))


def _clip(values: np.ndarray, bounds: Tuple[float, float], scale: float) -> np.ndarray:
    return np.clip(values, bounds[0] - ROOT_TOL * scale, bounds[1] + ROOT_TOL * scale)


def _corner_tuple(j1, j2, j3, j) -> Tuple[Tuple[str, float, float], ...]:
    return tuple((flag, float(x), float(y)) for flag, (x, y) in corner_points(j1, j2, j3, j).items())


def sample_caustic(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                   n_points: int = 400) -> CurveSample:
    """
    Closed caustic polyline of a screen.

    The minus branch is traversed upwards in y and the plus branch back down,
    so the ovaloid is walked in one orientation and closed on its start point.

    Args:
        j1, j2, j3, j: Screen parameters
        n_points: Number of points, at least 16

    Returns:
        CurveSample of kind "caustic" with V^2 residuals

    Raises:
        EmptyDomain: If the parameters admit no screen
    """
    params = ScreenParams.from_labels(j1, j2, j3, j)
    m = max(n_points // 2, 8)
    ylo, yhi = params.y_bounds
    ylo = max(ylo, Y_FLOOR * params.scale)
    ys = chebyshev_nodes(ylo, yhi, m)

    minus: List[Tuple[float, float]] = []
    plus: List[Tuple[float, float]] = []
    gaps = 0
    for y in ys:
        try:
            roots = caustic_roots_x(float(y), *params.edges)
        except NoRoot:
            gaps += 1
            continue
        minus.append((roots.roots[0], float(y)))
        if not roots.tangent:
            plus.append((roots.roots[-1], float(y)))

    points = minus + plus[::-1]
    branches = ["minus"] * len(minus) + ["plus"] * len(plus)
    if points:
        points.append(points[0])
        branches.append(branches[0])
    arr = np.array(points, dtype=float).reshape(-1, 2)
    arr[:, 0] = _clip(arr[:, 0], params.x_bounds, params.scale)
    residuals = params.polynomial().value(arr[:, 0], arr[:, 1]) / 144

    if gaps:
        logger.warning(f"caustic for ({j1}, {j2}, {j3}, {j}) has {gaps} gap lines")
    logger.info(f"sampled caustic for ({j1}, {j2}, {j3}, {j}): {len(arr)} points")
    return CurveSample(kind="caustic", points=arr, branches=tuple(branches), residuals=residuals,
                       closed=True, gaps=gaps, flags=params.flags, corners=_corner_tuple(j1, j2, j3, j))


def sample_ridges(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                  n_points: int = 400) -> Tuple[CurveSample, CurveSample]:
    """
    Both ridge polylines of a screen, clipped to the screen rectangle.

    Returns:
        (ridge_x, ridge_y) samples; residuals are the transverse derivatives of V^2
    """
    params = ScreenParams.from_labels(j1, j2, j3, j)
    poly = params.polynomial()
    scale = params.scale
    out = []
    for kind, bounds, other in (("ridge_x", params.y_bounds, params.x_bounds),
                                ("ridge_y", params.x_bounds, params.y_bounds)):
        lo = max(bounds[0], Y_FLOOR * scale)
        nodes = chebyshev_nodes(lo, bounds[1], max(n_points, 16))
        pts: List[Tuple[float, float]] = []
        gaps = 0
        for t in nodes:
            try:
                if kind == "ridge_x":
                    s = ridge_x(float(t), *params.edges)
                else:
                    s = ridge_y(float(t), *params.edges)
            except OutOfScreen:
                gaps += 1
                continue
            if not (other[0] - ROOT_TOL * scale <= s <= other[1] + ROOT_TOL * scale):
                gaps += 1
                continue
            pts.append((s, float(t)) if kind == "ridge_x" else (float(t), s))
        arr = np.array(pts, dtype=float).reshape(-1, 2)
        dx, dy = poly.gradient(arr[:, 0], arr[:, 1])
        residuals = (dx if kind == "ridge_x" else dy) / 144
        out.append(CurveSample(kind=kind, points=arr, branches=("plus",) * len(arr),
                               residuals=residuals, gaps=gaps, flags=params.flags))
    return out[0], out[1]


def distance_to_caustic(points: np.ndarray, params: ScreenParams) -> np.ndarray:
    """First-order distance |f| / |grad f| from each point to the zero set of V^2."""
    poly = params.polynomial()
    f = poly.value(points[:, 0], points[:, 1])
    gx, gy = poly.gradient(points[:, 0], points[:, 1])
    norm = np.hypot(gx, gy)
    return np.abs(f) / np.maximum(norm, np.finfo(float).tiny)


def mirror_hausdorff(curve: CurveSample, params: ScreenParams) -> float:
    """
    How far the diagonal reflection of a caustic sample lies from the caustic.

    Returns:
        Max first-order distance of the reflected points; ~0 on a Piero-symmetric screen
    """
    reflected = curve.points[:, ::-1]
    return float(np.max(distance_to_caustic(reflected, params))) if len(reflected) else 0.0


def mirror_curves(curves: List[CurveSample]) -> List[CurveSample]:
    """
    Reflected copies of curves into the negative quadrants.

    V^2 depends on squared edges only, so residuals carry over unchanged.

    Returns:
        The input curves followed by their x-, y- and xy-reflections
    """
    result = list(curves)
    for tag, sign in (("mx", (-1.0, 1.0)), ("my", (1.0, -1.0)), ("mxy", (-1.0, -1.0))):
        for curve in curves:
            result.append(replace(curve, points=curve.points * np.array(sign),
                                  branches=tuple(f"{b}-{tag}" for b in curve.branches)))
    return result


def residual_bound(kind: str, scale: float, caustic_rel: float, ridge_rel: float) -> float:
    """Largest acceptable |residual| for a curve kind: V^2 scales as length^6, its derivative as length^5."""
    if kind == "caustic":
        return caustic_rel * scale ** 6
    return ridge_rel * scale ** 5


def check_curves(curves: List[CurveSample], params: ScreenParams,
                 caustic_rel: float, ridge_rel: float) -> List[str]:
    """
    Curves whose sampled residuals exceed the relative tolerances.

    Args:
        curves: Samples of one screen, mirrored copies included
        params: Screen the curves belong to
        caustic_rel: Relative bound on V^2 along the caustic
        ridge_rel: Relative bound on the transverse derivative along ridges

    Returns:
        Kinds of the failing curves, in input order
    """
    failing = []
    for curve in curves:
        if not len(curve):
            continue
        worst = float(np.max(np.abs(curve.residuals)))
        bound = residual_bound(curve.kind, params.scale, caustic_rel, ridge_rel)
        if not worst <= bound:
            logger.warning(f"{curve.kind} residual {worst:.3g} exceeds {bound:.3g}")
            failing.append(curve.kind)
    return failing
