#!/usr/bin/env python3
"""
Tests for the Regge symmetry.
"""

import random

import pytest

from src.angular.domain import screen_domain
from src.angular.half_int import HalfInt
from src.angular.labels import SixJLabels
from src.exact.racah import sixj_exact
from src.symmetry.regge import (regge_rho, regge_rho_quadruple, regge_transform,
                                regge_twin_quadruple, size_from_regge)


class TestRegge:
    """Test rho, twins and the size identity."""

    def test_generic_rho(self) -> None:
        """(45, 30, 55, 60) has rho = -5 and s = 95."""
        data = regge_rho_quadruple(45, 30, 55, 60)
        assert data.rho == HalfInt.of(-5)
        assert data.s == HalfInt.of(95)

    def test_semi_perimeter_identities(self) -> None:
        """s = rho + j1 + j3 = -rho + j2 + j."""
        labels = SixJLabels.of("7/2", 3, "5/2", "9/2", 5, "3/2")
        data = regge_rho(labels)
        assert data.s == data.rho + labels.j1 + labels.j3
        assert data.s == -data.rho + labels.j2 + labels.j

    def test_twin(self) -> None:
        """The twin of (45, 30, 55, 60) is (40, 35, 50, 65)."""
        assert regge_twin_quadruple(45, 30, 55, 60) == tuple(HalfInt.of(v) for v in (40, 35, 50, 65))

    def test_involution(self) -> None:
        """Applying the transform twice is the identity."""
        labels = SixJLabels.of(45, 30, 40, 55, 60, 60)
        twin = regge_transform(labels)
        assert twin == SixJLabels.of(40, 35, 40, 50, 65, 60)
        assert regge_transform(twin) == labels

    def test_twin_has_same_screen(self) -> None:
        """j12 and j23 ranges are unchanged."""
        assert screen_domain(45, 30, 55, 60) == screen_domain(40, 35, 50, 65)

    @pytest.mark.parametrize("quad,size", [
        ((45, 30, 55, 60), 61),
        ((100, 100, 100, 100), 201),
        ((1000, 1000, 100, 100), 201),
        ((140, 130, 110, 100), 201),
    ])
    def test_size_identity(self, quad, size) -> None:
        """Screen size is twice the smallest edge of the symbol and its twin."""
        assert size_from_regge(*quad) == size
        assert screen_domain(*quad).size == size

    def test_odd_total_rejected(self) -> None:
        """Quadruples with half-odd total have no rho."""
        with pytest.raises(ValueError):
            regge_rho_quadruple(1, 1, 1, "1/2")

    def test_exact_values_agree_on_screen(self) -> None:
        """Twin symbols are equal as exact radicals at random screen points."""
        rng = random.Random(45)
        domain = screen_domain(45, 30, 55, 60)
        for _ in range(20):
            j12 = HalfInt.of(rng.randint(15, 75))
            j23 = HalfInt.of(rng.randint(25, 85))
            assert domain.contains(j12, j23)
            original = SixJLabels.of(45, 30, j12, 55, 60, j23)
            twin = SixJLabels.of(40, 35, j12, 50, 65, j23)
            assert regge_transform(original) == twin
            assert sixj_exact(original) == sixj_exact(twin)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
