#!/usr/bin/env python3
"""
Tests for tetrahedron volumes.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from src.angular.labels import SixJLabels
from src.errors import NotATriangle
from src.geometry.ridges import ridge_x
from src.geometry.volume import (ScreenPolynomial, TetraEdges, triangle_area, volume_squared_cm,
                                 volume_squared_exact, volume_squared_gram, volume_squared_xy)


class TestVolumeSquared:
    """Test the determinant formulas."""

    def test_regular_tetrahedron(self) -> None:
        """Unit edges give V^2 = 1/72 from both determinants."""
        edges = TetraEdges(1, 1, 1, 1, 1, 1)
        assert volume_squared_cm(edges) == Fraction(1, 72)
        assert volume_squared_gram(edges) == Fraction(1, 72)

    def test_float_edges(self) -> None:
        """Float edges go through numpy with the same result."""
        edges = TetraEdges(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)
        assert volume_squared_cm(edges) == pytest.approx(1 / 72, rel=1e-12)
        assert volume_squared_gram(edges) == pytest.approx(1 / 72, rel=1e-12)

    def test_flat_tetrahedron(self) -> None:
        """A 3x4 rectangle with its diagonals has exactly zero volume."""
        edges = TetraEdges(J1=3, J2=5, J3=3, J=5, J12=4, J23=4)
        assert volume_squared_cm(edges) == 0
        assert volume_squared_gram(edges) == 0

    def test_cm_equals_gram_at_quantum_labels(self) -> None:
        """Both determinants agree exactly on random valid symbols."""
        rng = random.Random(11)
        checked = 0
        while checked < 40:
            labels = SixJLabels.from_twice(tuple(rng.randint(0, 40) for _ in range(6)))
            if not labels.is_valid():
                continue
            edges = TetraEdges.from_labels(labels)
            assert volume_squared_cm(edges) == volume_squared_gram(edges)
            assert volume_squared_exact(labels) == volume_squared_cm(edges)
            checked += 1

    def test_classical_symbol_positive(self) -> None:
        """{45 30 40; 55 60 60} lies inside the caustic."""
        assert volume_squared_exact(SixJLabels.of(45, 30, 40, 55, 60, 60)) > 0


class TestFloatVolumes:
    """Test floating-point edges against exact and coordinate references."""

    @pytest.mark.slow
    def test_cm_equals_gram_on_random_edges(self) -> None:
        """1000 random edge sets in [0.1, 100] agree to 1e-12 and match the exact value."""
        rng = random.Random(0)
        for _ in range(1000):
            values = [rng.uniform(0.1, 100.0) for _ in range(6)]
            edges = TetraEdges(*values)
            cm, gram = volume_squared_cm(edges), volume_squared_gram(edges)
            assert isinstance(cm, float)
            assert abs(cm - gram) <= 1e-12 * abs(gram)
            assert cm == float(volume_squared_cm(TetraEdges(*(Fraction(v) for v in values))))

    def test_embedded_tetrahedra(self) -> None:
        """V^2 from edge lengths matches the coordinate triple product."""
        rng = np.random.default_rng(5)
        for _ in range(200):
            p = rng.uniform(-10.0, 10.0, size=(4, 3))
            d = {(a, b): float(np.linalg.norm(p[a] - p[b])) for a in range(4) for b in range(a + 1, 4)}
            edges = TetraEdges(J1=d[(2, 3)], J2=d[(1, 3)], J3=d[(0, 1)], J=d[(0, 2)],
                               J12=d[(1, 2)], J23=d[(0, 3)])
            expected = (np.linalg.det(p[1:] - p[0]) / 6) ** 2
            assert volume_squared_cm(edges) == pytest.approx(expected, rel=1e-9, abs=1e-11 * edges.scale() ** 6)


class TestScreenPolynomial:
    """Test the screen form of V^2."""

    def test_matches_cayley_menger(self) -> None:
        """The polynomial equals the 5x5 determinant exactly."""
        J1, J2, J3, J = Fraction(91, 2), Fraction(61, 2), Fraction(111, 2), Fraction(121, 2)
        poly = ScreenPolynomial.from_edges(J1, J2, J3, J)
        for x, y in [(Fraction(81, 2), Fraction(121, 2)), (Fraction(31, 2), Fraction(51, 2)), (30, 70)]:
            expected = volume_squared_cm(TetraEdges(J1=J1, J2=J2, J3=J3, J=J, J12=x, J23=y))
            assert poly.value(x, y) / 144 == expected
            assert volume_squared_xy(x, y, J1, J2, J3, J) == expected

    def test_mirror_invariance(self) -> None:
        """V^2 depends on squared lengths only."""
        poly = ScreenPolynomial.from_edges(45.5, 30.5, 55.5, 60.5)
        value = poly.value(40.5, 60.5)
        assert poly.value(-40.5, 60.5) == value
        assert poly.value(40.5, -60.5) == value
        assert poly.value(-40.5, -60.5) == value

    def test_gradient_matches_finite_difference(self) -> None:
        """Analytic partials agree with central differences."""
        poly = ScreenPolynomial.from_edges(45.5, 30.5, 55.5, 60.5)
        x, y, h = 40.5, 60.5, 1e-4
        gx, gy = poly.gradient(x, y)
        fx = (poly.value(x + h, y) - poly.value(x - h, y)) / (2 * h)
        fy = (poly.value(x, y + h) - poly.value(x, y - h)) / (2 * h)
        assert gx == pytest.approx(fx, rel=1e-6)
        assert gy == pytest.approx(fy, rel=1e-6)

    def test_partials_vanish_on_ridges(self) -> None:
        """dX is zero at ridge_x and changes sign across it."""
        edges = (45.5, 30.5, 55.5, 60.5)
        poly = ScreenPolynomial.from_edges(*edges)
        y = 60.5
        x0 = ridge_x(y, *edges)
        assert poly.partials_squared(x0, y)[0] == pytest.approx(0.0, abs=1e-9 * 86.0 ** 4)
        assert poly.partials_squared(x0 - 1, y)[0] > 0 > poly.partials_squared(x0 + 1, y)[0]

    def test_diagonal_symmetry(self) -> None:
        """A1 = A2 exactly when j1 = j3 or j2 = j."""
        assert ScreenPolynomial.from_edges(100.5, 150.5, 100.5, 210.5).is_diagonal_symmetric()
        assert ScreenPolynomial.from_edges(110.5, 100.5, 120.5, 100.5).is_diagonal_symmetric()
        assert not ScreenPolynomial.from_edges(100.5, 100.5, 150.5, 210.5).is_diagonal_symmetric()


class TestTriangleArea:
    """Test face areas."""

    def test_right_triangle(self) -> None:
        """3-4-5 has area 6."""
        assert triangle_area(3, 4, 5) == pytest.approx(6.0)

    def test_degenerate_is_zero(self) -> None:
        """Collinear sides give zero."""
        assert triangle_area(1, 2, 3) == 0.0

    def test_violation_raises(self) -> None:
        """Clear violations raise NotATriangle."""
        with pytest.raises(NotATriangle):
            triangle_area(1, 2, 5)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
