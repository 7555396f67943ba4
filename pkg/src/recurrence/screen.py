#!/usr/bin/env python3
"""
Whole 6j screens from the one-variable recurrence in j12.

Each column (fixed j23) is computed by two-sided recursion of the symmetric
form u = sqrt(2 j12 + 1) f: forward from j12_min, backward from j12_max,
joined inside the classically allowed window where neither direction is
unstable. The column is then normalized by unitarity and its sign fixed by one
exact evaluation.

Values are stored dense with index 0 <-> j12_min (rows) and j23_min
(columns), i.e. values[k12, k23].
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from src.angular.domain import ScreenDomain, screen_domain
from src.angular.half_int import HalfInt, HalfIntLike
from src.angular.labels import SixJLabels
from src.errors import RecurrenceBreakdown
from src.exact.racah import sixj_exact
from src.recurrence.coefficients import diagonal, off_diagonal

logger = logging.getLogger(__name__)

OVERFLOW_RESCALE = 1e250


@dataclass(frozen=True)
class Screen:
    """
    A full orthonormal 6j matrix for fixed (j1, j2, j3, j).

    Attributes:
        params: (j1, j2, j3, j)
        domain: Screen bounds
        values: Array of shape (size, size) indexed [j12 index, j23 index]
        column_defects: Per-column |sum (2j12+1)(2j23+1) v^2 - 1|
        fallback_columns: Columns filled by exact evaluation after a breakdown
        method: "recurrence" or "exact"
    """
    params: Tuple[HalfInt, HalfInt, HalfInt, HalfInt]
    domain: ScreenDomain
    values: np.ndarray
    column_defects: np.ndarray
    fallback_columns: Tuple[int, ...] = field(default=())
    method: str = "recurrence"

    @property
    def size(self) -> int:
        return self.domain.size

    def j12_axis(self) -> np.ndarray:
        return np.array([float(v) for v in self.domain.j12_values()])

    def j23_axis(self) -> np.ndarray:
        return np.array([float(v) for v in self.domain.j23_values()])

    def value(self, j12: HalfIntLike, j23: HalfIntLike) -> float:
        """Entry at quantum labels (j12, j23)."""
        h12, h23 = HalfInt.of(j12), HalfInt.of(j23)
        if not self.domain.contains(h12, h23):
            raise KeyError(f"({h12}, {h23}) is not on the screen")
        return float(self.values[(h12.twice - self.domain.j12_min.twice) // 2,
                                 (h23.twice - self.domain.j23_min.twice) // 2])

    @property
    def row_defect(self) -> float:
        return orthonormality_defect(self, "rows")

    @property
    def column_defect(self) -> float:
        return orthonormality_defect(self, "columns")


def _weights(domain: ScreenDomain) -> Tuple[np.ndarray, np.ndarray]:
    x = np.array([float(v) for v in domain.j12_values()])
    y = np.array([float(v) for v in domain.j23_values()])
    return 2 * x + 1, 2 * y + 1


def _join_index(d: np.ndarray, b: np.ndarray, lam: float) -> int:
    """Matching index inside the classically allowed window of the column."""
    n = len(d)
    left = np.concatenate(([0.0], b[1:]))
    right = np.concatenate((b[1:], [0.0]))
    margin = left + right - np.abs(d - lam)
    window = np.flatnonzero(margin > 0)
    m = int(window[len(window) // 2]) if len(window) else int(np.argmax(margin))
    return min(max(m, 0), n - 2)


def _forward(d: np.ndarray, b: np.ndarray, lam: float, stop: int,
             rescale: float = OVERFLOW_RESCALE) -> np.ndarray:
    u = np.zeros(len(d))
    u[0] = 1.0
    for k in range(stop):
        prev = b[k] * u[k - 1] if k > 0 else 0.0
        u[k + 1] = ((lam - d[k]) * u[k] - prev) / b[k + 1]
        if abs(u[k + 1]) > rescale:
            u[:k + 2] /= abs(u[k + 1])
    return u


def _backward(d: np.ndarray, b: np.ndarray, lam: float, stop: int,
              rescale: float = OVERFLOW_RESCALE) -> np.ndarray:
    n = len(d)
    w = np.zeros(n)
    w[n - 1] = 1.0
    for k in range(n - 1, stop, -1):
        nxt = b[k + 1] * w[k + 1] if k < n - 1 else 0.0
        w[k - 1] = ((lam - d[k]) * w[k] - nxt) / b[k]
        if abs(w[k - 1]) > rescale:
            w[k - 1:] /= abs(w[k - 1])
    return w


def _unit_max(v: np.ndarray) -> np.ndarray:
    peak = float(np.max(np.abs(v)))
    return v / peak if peak > 0 and np.isfinite(peak) else v


def _column_u(domain: ScreenDomain, quad: Tuple[float, float, float, float], j23: float,
              rescale: float = OVERFLOW_RESCALE) -> np.ndarray:
    """Unit vector u = sqrt((2j12+1)(2j23+1)) f for one column, sign not fixed."""
    x = np.array([float(v) for v in domain.j12_values()])
    n = len(x)
    if n == 1:
        return np.ones(1)
    d = diagonal(x, *quad)
    b = np.zeros(n)
    b[1:] = off_diagonal(x[1:], *quad)
    lam = j23 * (j23 + 1)

    m = _join_index(d, b, lam)
    # Both passes are brought to max |entry| = 1 so the match never squares large values.
    fwd = _unit_max(_forward(d, b, lam, m + 1, rescale))
    bwd = _unit_max(_backward(d, b, lam, m, rescale))
    pivot = max(abs(bwd[m]), abs(bwd[m + 1]))
    if pivot == 0 or not np.isfinite(pivot):
        raise RecurrenceBreakdown(f"backward seed vanished at j23={j23}")
    bm, bm1 = bwd[m] / pivot, bwd[m + 1] / pivot
    ratio = (fwd[m] * bm + fwd[m + 1] * bm1) / (bm * bm + bm1 * bm1)
    u = _unit_max(np.concatenate((fwd[:m + 1], ratio * (bwd[m + 1:] / pivot))))

    norm = float(np.sqrt(np.sum(u * u)))
    if norm == 0 or not np.all(np.isfinite(u)):
        raise RecurrenceBreakdown(f"recurrence lost the column j23={j23}")
    return u / norm


def sixj_column(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                j23: HalfIntLike, overflow_rescale: float = OVERFLOW_RESCALE) -> np.ndarray:
    """
    All 6j values {j1 j2 j12; j3 j j23} over the allowed j12 range.

    Args:
        j1, j2, j3, j: Screen parameters
        j23: Fixed column label
        overflow_rescale: Magnitude at which a recursion pass is renormalized

    Returns:
        Values ordered from j12_min to j12_max

    Raises:
        EmptyDomain: If the screen is empty
        RecurrenceBreakdown: If the recursion produces zero or non-finite values
    """
    h1, h2, h3, h, h23 = (HalfInt.of(v) for v in (j1, j2, j3, j, j23))
    domain = screen_domain(h1, h2, h3, h)
    if not domain.j23_min <= h23 <= domain.j23_max:
        raise RecurrenceBreakdown(f"j23={h23} is outside [{domain.j23_min}, {domain.j23_max}]")
    quad = (float(h1), float(h2), float(h3), float(h))
    u = _column_u(domain, quad, float(h23), overflow_rescale)

    j12s = list(domain.j12_values())
    # Sign from the exact value at j12_max, else at the largest entry.
    k = len(u) - 1
    exact = sixj_exact(SixJLabels(h1, h2, j12s[k], h3, h, h23)).to_float()
    if exact == 0.0 or abs(u[k]) < 1e-12:
        k = int(np.argmax(np.abs(u)))
        exact = sixj_exact(SixJLabels(h1, h2, j12s[k], h3, h, h23)).to_float()
    if exact != 0.0 and (u[k] > 0) != (exact > 0):
        u = -u

    x = np.array([float(v) for v in j12s])
    return u / np.sqrt((2 * x + 1) * (2 * float(h23) + 1))


def _exact_column(domain: ScreenDomain, quad: Tuple[HalfInt, ...], j23: HalfInt) -> np.ndarray:
    h1, h2, h3, h = quad
    return np.array([sixj_exact(SixJLabels(h1, h2, j12, h3, h, j23)).to_float()
                     for j12 in domain.j12_values()])


def _column_defects(domain: ScreenDomain, values: np.ndarray) -> np.ndarray:
    wx, wy = _weights(domain)
    return np.abs((wx[:, None] * values ** 2).sum(axis=0) * wy - 1)


def _freeze(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


def build_screen(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike,
                 threads: int = 1, fallback_exact: bool = False,
                 overflow_rescale: float = OVERFLOW_RESCALE) -> Screen:
    """
    Build the full screen column by column.

    Args:
        j1, j2, j3, j: Screen parameters
        threads: Worker threads for independent columns
        fallback_exact: Fill a broken column from exact values instead of raising
        overflow_rescale: Renormalization threshold of the recursion passes

    Returns:
        Screen with per-column unitarity defects

    Raises:
        EmptyDomain: If the parameters admit no screen
        RecurrenceBreakdown: With the failing column index, unless fallback_exact
    """
    quad = tuple(HalfInt.of(v) for v in (j1, j2, j3, j))
    domain = screen_domain(*quad)
    j23s = list(domain.j23_values())
    logger.info(f"building {domain.size}x{domain.size} screen for {tuple(str(v) for v in quad)}")

    def column(k: int) -> Tuple[int, np.ndarray, bool]:
        try:
            return k, sixj_column(*quad, j23s[k], overflow_rescale), False
        except RecurrenceBreakdown as e:
            if not fallback_exact:
                raise RecurrenceBreakdown(str(e), column=k) from e
            logger.warning(f"column {k} (j23={j23s[k]}) falls back to exact evaluation: {e}")
            return k, _exact_column(domain, quad, j23s[k]), True

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(column, range(domain.size)))
    else:
        results = [column(k) for k in range(domain.size)]

    values = np.empty((domain.size, domain.size))
    fallback: List[int] = []
    for k, col, fell_back in results:
        values[:, k] = col
        if fell_back:
            fallback.append(k)

    defects = _column_defects(domain, values)
    logger.debug(f"max column defect {defects.max():.3g}")
    return Screen(params=quad, domain=domain, values=_freeze(values), column_defects=defects,
                  fallback_columns=tuple(fallback))


def exact_screen(j1: HalfIntLike, j2: HalfIntLike, j3: HalfIntLike, j: HalfIntLike) -> Screen:
    """Screen filled element by element from the exact Racah sum."""
    quad = tuple(HalfInt.of(v) for v in (j1, j2, j3, j))
    domain = screen_domain(*quad)
    values = np.column_stack([_exact_column(domain, quad, j23) for j23 in domain.j23_values()])
    return Screen(params=quad, domain=domain, values=_freeze(values),
                  column_defects=_column_defects(domain, values), method="exact")


def orthonormality_defect(screen: Screen, axis: str = "columns") -> float:
    """
    Deviation of the screen from an orthogonal matrix.

    With weights w = (2j12+1)(2j23+1), each line must have unit weighted norm
    and adjacent lines must be orthogonal.

    Args:
        screen: Built screen
        axis: "columns" (fixed j23) or "rows" (fixed j12)

    Returns:
        max(|norm - 1| over lines, |overlap| over adjacent line pairs)
    """
    if axis not in ("rows", "columns"):
        raise ValueError(f"axis must be 'rows' or 'columns', got {axis!r}")
    wx, wy = _weights(screen.domain)
    u = screen.values * np.sqrt(wx)[:, None] * np.sqrt(wy)[None, :]
    if axis == "rows":
        u = u.T
    norms = np.abs((u * u).sum(axis=0) - 1)
    worst = float(norms.max())
    if u.shape[1] > 1:
        overlaps = np.abs((u[:, :-1] * u[:, 1:]).sum(axis=0))
        worst = max(worst, float(overlaps.max()))
    return worst


def screen_max_difference(a: Screen, b: Screen) -> Optional[float]:
    """Elementwise max |a - b|, None when the shapes differ."""
    if a.values.shape != b.values.shape:
        return None
    return float(np.max(np.abs(a.values - b.values)))


def transpose_defect(screen: Screen) -> Optional[float]:
    """Elementwise max |values - values.T|, None when the j12 and j23 ranges differ."""
    domain = screen.domain
    if (domain.j12_min, domain.j12_max) != (domain.j23_min, domain.j23_max):
        return None
    return float(np.max(np.abs(screen.values - screen.values.T)))
