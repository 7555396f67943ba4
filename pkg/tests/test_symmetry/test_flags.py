#!/usr/bin/env python3
"""
Tests for degeneracy flags and the diagonal certificate, checked against the
figure presets.
"""

import pytest

from src.angular.labels import SixJLabels
from src.config.figures import FIGURE_PRESETS, preset_quadruples
from src.symmetry.flags import degeneracy_flags, piero_axis

FIXED = [name for name, preset in FIGURE_PRESETS.items() if preset.sweep is None]


class TestDegeneracyFlags:
    """Test the B, C and D flags."""

    @pytest.mark.parametrize("name", FIXED)
    def test_preset_flags(self, name) -> None:
        """Each preset shows exactly its recorded flags."""
        preset = FIGURE_PRESETS[name]
        quad = preset_quadruples(preset)[0]
        assert degeneracy_flags(*quad) == frozenset(preset.flags)

    def test_generic_has_no_flags(self) -> None:
        """(45, 30, 55, 60) is not degenerate."""
        assert degeneracy_flags(45, 30, 55, 60) == frozenset()

    def test_accepts_labels(self) -> None:
        """A full symbol can be passed instead of the quadruple."""
        assert degeneracy_flags(SixJLabels.of(140, 110, 50, 100, 130, 40)) == frozenset({"D"})

    def test_bad_arity(self) -> None:
        """Anything but one symbol or four labels is refused."""
        with pytest.raises(TypeError):
            degeneracy_flags(1, 2, 3)


class TestPieroAxis:
    """Test the diagonal-symmetry certificate."""

    @pytest.mark.parametrize("name", FIXED)
    def test_preset_certificates(self, name) -> None:
        """Certificates match the presets."""
        preset = FIGURE_PRESETS[name]
        certificate = piero_axis(*preset_quadruples(preset)[0])
        if preset.piero is None:
            assert certificate is None
        else:
            assert str(certificate) == preset.piero

    def test_j1_equals_j2_is_not_enough(self) -> None:
        """j1 = j2 alone does not certify a diagonal symmetry."""
        assert piero_axis(100, 100, 150, 210) is None

    def test_corner_flag_without_certificate(self) -> None:
        """A D degeneracy can occur on a screen without diagonal symmetry."""
        assert degeneracy_flags(140, 110, 100, 130) == frozenset({"D"})
        assert piero_axis(140, 110, 100, 130) is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
