#!/usr/bin/env python3
"""
Tests for screen domains.

Tests cover the exact j12/j23 bounds of the reference figures, empty and
half-odd parameter sets, and the screen-size identity through Regge twins.
"""

import random
from fractions import Fraction

import pytest

from src.angular.domain import screen_domain, screen_labels
from src.angular.half_int import HalfInt
from src.errors import EmptyDomain
from src.symmetry.regge import size_from_regge


class TestScreenDomain:
    """Test screen bounds."""

    def test_generic_screen_bounds(self) -> None:
        """(45, 30, 55, 60) spans J12 in [15, 76] and J23 in [25, 86]."""
        domain = screen_domain(45, 30, 55, 60)
        assert domain.j12_min == HalfInt.of(15)
        assert domain.j12_max == HalfInt.of(75)
        assert domain.j23_min == HalfInt.of(25)
        assert domain.j23_max == HalfInt.of(85)
        assert domain.size == 61
        assert domain.x_bounds == (Fraction(15), Fraction(76))
        assert domain.y_bounds == (Fraction(25), Fraction(86))

    def test_symmetric_screen(self) -> None:
        """(100, 100, 100, 100) gives a 201 x 201 screen from 0."""
        domain = screen_domain(100, 100, 100, 100)
        assert domain.size == 201
        assert domain.x_bounds == (Fraction(0), Fraction(201))

    def test_two_large_entries(self) -> None:
        """(1000, 1000, 100, 100) has J23 in [900, 1101]."""
        domain = screen_domain(1000, 1000, 100, 100)
        assert domain.y_bounds == (Fraction(900), Fraction(1101))
        assert domain.size == 201

    def test_half_integer_screen(self) -> None:
        """All-half parameters give a 2 x 2 screen."""
        domain = screen_domain("1/2", "1/2", "1/2", "1/2")
        assert domain.size == 2
        assert [str(v) for v in domain.j12_values()] == ["0", "1"]

    def test_empty_domain(self) -> None:
        """(1, 1, 1, 5) admits no j12."""
        with pytest.raises(EmptyDomain):
            screen_domain(1, 1, 1, 5)

    def test_half_odd_total(self) -> None:
        """A half-odd total cannot close."""
        with pytest.raises(EmptyDomain):
            screen_domain("1/2", "1/2", "1/2", 1)

    def test_negative_rejected(self) -> None:
        """Negative momenta are not physical."""
        with pytest.raises(EmptyDomain):
            screen_domain(-1, 1, 1, 1)

    def test_contains_and_labels(self) -> None:
        """Grid membership respects bounds and unit steps."""
        domain = screen_domain(1, 1, 1, 1)
        assert domain.contains(HalfInt.of(0), HalfInt.of(2))
        assert not domain.contains(HalfInt.of(3), HalfInt.of(0))
        assert not domain.contains(HalfInt(1), HalfInt.of(0))
        labels = screen_labels(1, 1, 1, 1, 2, 0)
        assert str(labels) == "{1 1 2; 1 1 0}"
        assert labels.is_valid()


class TestScreenSizeIdentity:
    """Test size = 2 min of the eight edges of a symbol and its Regge twin."""

    def test_generic_example(self) -> None:
        """(45, 30, 55, 60) has size 61 = 2 * 30.5."""
        assert size_from_regge(45, 30, 55, 60) == 61

    def test_random_quadruples(self) -> None:
        """The identity holds on random nonempty screens with entries up to 300."""
        rng = random.Random(20260)
        checked = 0
        while checked < 500:
            quad = [HalfInt(rng.randint(0, 600)) for _ in range(4)]
            try:
                domain = screen_domain(*quad)
            except EmptyDomain:
                continue
            assert size_from_regge(*quad) == domain.size, quad
            checked += 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
