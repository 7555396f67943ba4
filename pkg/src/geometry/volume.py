#!/usr/bin/env python3
"""
Squared volume of the tetrahedron associated with a 6j symbol.

Vertex numbering of the Cayley-Menger matrix, as squared edge lengths:

    (1,2) = J3^2   (1,3) = J^2    (1,4) = J23^2
    (2,3) = J12^2  (2,4) = J2^2   (3,4) = J1^2

so opposite edge pairs are (J1, J3), (J2, J) and (J12, J23). The 5x5
determinant equals 288 V^2; the 3x3 Gram determinant of the edge vectors from
vertex 1 equals 36 V^2. On the screen the same quantity is a quadratic in
X = J12^2 and Y = J23^2:

    144 V^2 = X Y (Jt^2 - X - Y) + A1 X + A2 Y + C0

Exact Fractions in, exact Fraction out. Float edges are read as the rationals
they represent and the determinant is rounded once, so V^2 near a flat
configuration keeps its relative accuracy.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np
import sympy

from src.angular.labels import SixJLabels
from src.errors import NotATriangle

logger = logging.getLogger(__name__)

Real = Union[float, int, Fraction]

TRIANGLE_TOL = 1e-12


@dataclass(frozen=True)
class TetraEdges:
    """
    Continuous tetrahedron edges; for quantum labels J = j + 1/2.

    Attributes:
        J1, J2, J3, J: Edges opposite J3, J, J1 and J2 respectively
        J12: Edge opposite J23
        J23: Edge opposite J12
    """
    J1: Real
    J2: Real
    J3: Real
    J: Real
    J12: Real
    J23: Real

    @classmethod
    def from_labels(cls, labels: SixJLabels) -> "TetraEdges":
        """Exact edges J = j + 1/2 of a symbol."""
        e1, e2, e12, e3, e, e23 = labels.edges()
        return cls(J1=e1, J2=e2, J3=e3, J=e, J12=e12, J23=e23)

    def values(self) -> Tuple[Real, ...]:
        return (self.J1, self.J2, self.J3, self.J, self.J12, self.J23)

    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.values())

    def scale(self) -> float:
        """Maximum absolute edge, the homogeneity scale of V^2 (degree 6)."""
        return max(abs(float(v)) for v in self.values())


def cayley_menger_matrix(e: TetraEdges) -> List[List[Real]]:
    """The bordered 5x5 matrix of squared distances."""
    sq = [v * v for v in (e.J3, e.J, e.J23, e.J12, e.J2, e.J1)]
    d12, d13, d14, d23, d24, d34 = sq
    return [
        [0, 1, 1, 1, 1],
        [1, 0, d12, d13, d14],
        [1, d12, 0, d23, d24],
        [1, d13, d23, 0, d34],
        [1, d14, d24, d34, 0],
    ]


def gram_matrix(e: TetraEdges) -> List[List[Real]]:
    """Gram matrix of the edge vectors a, b, c from vertex 1 to vertices 2, 3, 4."""
    half = Fraction(1, 2) if e.is_exact() else 0.5
    aa, bb, cc = e.J3 * e.J3, e.J * e.J, e.J23 * e.J23
    ab = (aa + bb - e.J12 * e.J12) * half
    ac = (aa + cc - e.J2 * e.J2) * half
    bc = (bb + cc - e.J1 * e.J1) * half
    return [[aa, ab, ac], [ab, bb, bc], [ac, bc, cc]]


def exact_det(rows: Sequence[Sequence[Real]]) -> Fraction:
    """Determinant of a rational matrix via sympy's fraction-free Bareiss elimination."""
    matrix = sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row]
                           for row in rows])
    det = matrix.det(method="bareiss")
    return Fraction(int(det.p), int(det.q))


def _det(rows: Sequence[Sequence[Real]], exact: bool) -> Real:
    if exact:
        return exact_det(rows)
    return float(np.linalg.det(np.array(rows, dtype=float)))


def _volume_squared(rows: Sequence[Sequence[Real]], divisor: int, exact: bool) -> Real:
    value = exact_det(rows) / divisor
    return value if exact else float(value)


def _rational(e: TetraEdges) -> TetraEdges:
    if e.is_exact():
        return e
    return TetraEdges(*(Fraction(float(v)) for v in e.values()))


def volume_squared_cm(e: TetraEdges) -> Real:
    """
    V^2 from the 5x5 Cayley-Menger determinant.

    Args:
        e: Tetrahedron edges; exact when every edge is int or Fraction

    Returns:
        det / 288; negative for non-classical configurations. A float result is
        the exact value for the given float edges, correctly rounded
    """
    return _volume_squared(cayley_menger_matrix(_rational(e)), 288, e.is_exact())


def volume_squared_gram(e: TetraEdges) -> Real:
    """
    V^2 from the Gram determinant of three edge vectors.

    Args:
        e: Tetrahedron edges

    Returns:
        det / 36, identical to volume_squared_cm
    """
    return _volume_squared(gram_matrix(_rational(e)), 36, e.is_exact())


def volume_squared_exact(labels: SixJLabels) -> Fraction:
    """Exact V^2 at the quantum labels of a symbol, edges J = j + 1/2."""
    return volume_squared_cm(TetraEdges.from_labels(labels))


@dataclass(frozen=True)
class ScreenPolynomial:
    """
    Coefficients of 144 V^2 as a function of X = x^2 and Y = y^2.

    Attributes:
        Jt2: J1^2 + J2^2 + J3^2 + J^2
        A1: (J1^2 - J^2)(J3^2 - J2^2), the ridge_x constant
        A2: (J1^2 - J2^2)(J3^2 - J^2), the ridge_y constant
        C0: Constant term
    """
    Jt2: Real
    A1: Real
    A2: Real
    C0: Real

    @classmethod
    def from_edges(cls, J1: Real, J2: Real, J3: Real, J: Real) -> "ScreenPolynomial":
        s1, s2, s3, s = J1 * J1, J2 * J2, J3 * J3, J * J
        return cls(
            Jt2=s1 + s2 + s3 + s,
            A1=(s1 - s) * (s3 - s2),
            A2=(s1 - s2) * (s3 - s),
            C0=s1 * s3 * (s2 + s - s1 - s3) + s2 * s * (s1 + s3 - s2 - s),
        )

    def value(self, x, y):
        """144 V^2 at (x, y); works on scalars and numpy arrays."""
        X, Y = x * x, y * y
        return X * Y * (self.Jt2 - X - Y) + self.A1 * X + self.A2 * Y + self.C0

    def partials_squared(self, x, y) -> Tuple:
        """
        Partial derivatives of 144 V^2 with respect to X = x^2 and Y = y^2.

        144 V^2 is concave in X at fixed Y, so a negative dX means x lies past
        the ridge_x maximum, also when that ridge has no real position.
        """
        X, Y = x * x, y * y
        return Y * (self.Jt2 - 2 * X - Y) + self.A1, X * (self.Jt2 - X - 2 * Y) + self.A2

    def gradient(self, x, y) -> Tuple:
        """Partial derivatives of 144 V^2 with respect to x and y."""
        dX, dY = self.partials_squared(x, y)
        return 2 * x * dX, 2 * y * dY

    def is_diagonal_symmetric(self) -> bool:
        """True when V^2(x, y) = V^2(y, x), i.e. A1 = A2."""
        return self.A1 == self.A2


def volume_squared_xy(x: Real, y: Real, J1: Real, J2: Real, J3: Real, J: Real) -> Real:
    """V^2 on the screen at (J12, J23) = (x, y) from the polynomial form."""
    return ScreenPolynomial.from_edges(J1, J2, J3, J).value(x, y) / 144


def triangle_area(a: Real, b: Real, c: Real, tol: float = TRIANGLE_TOL) -> float:
    """
    Area of the triangle with sides a, b, c.

    Uses 16 F^2 = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4, which depends
    only on the squared sides.

    Args:
        a, b, c: Side lengths
        tol: Relative tolerance on the negative product, in units of scale^4

    Returns:
        Area; 0 for a product negative within tolerance

    Raises:
        NotATriangle: If the product is below -tol * scale^4
    """
    A, B, C = float(a) ** 2, float(b) ** 2, float(c) ** 2
    product = 2 * (A * B + B * C + C * A) - A * A - B * B - C * C
    if product < 0:
        scale = max(A, B, C)
        if product < -tol * scale * scale:
            raise NotATriangle(f"({a}, {b}, {c}) violates the triangle inequality")
        return 0.0
    return float(np.sqrt(product)) / 4
