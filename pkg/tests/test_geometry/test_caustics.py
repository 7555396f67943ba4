#!/usr/bin/env python3
"""
Tests for caustic roots and sampled curves.
"""

import dataclasses
from fractions import Fraction

import numpy as np
import pytest

from src.config.figures import FIGURE_PRESETS, preset_quadruples
from src.errors import EmptyDomain, NoRoot
from src.geometry.caustics import (ScreenParams, caustic_roots_x, caustic_roots_y, chebyshev_nodes, check_curves,
                                   mirror_curves, mirror_hausdorff, residual_bound, sample_caustic, sample_ridges)
from src.geometry.ridges import ridge_x, ridge_y_squared
from src.geometry.volume import ScreenPolynomial
from src.symmetry.flags import corner_points

FIG1A = (45, 30, 55, 60)
EDGES = (45.5, 30.5, 55.5, 60.5)


class TestCausticRoots:
    """Test caustic crossings with screen lines."""

    def test_roots_bracket_ridge(self) -> None:
        """Two ascending roots with the ridge between them."""
        roots = caustic_roots_x(60.5, *EDGES)
        assert not roots.tangent
        lo, hi = roots.roots
        assert lo < ridge_x(60.5, *EDGES) < hi
        assert lo == pytest.approx(15.06, abs=0.1)
        assert hi == pytest.approx(70.14, abs=0.05)

    def test_roots_are_zeros(self) -> None:
        """V^2 vanishes at both roots, in both directions."""
        poly = ScreenPolynomial.from_edges(*EDGES)
        scale6 = 86.0 ** 6
        for y in (30.0, 50.5, 80.0):
            for x in caustic_roots_x(y, *EDGES).roots:
                assert abs(poly.value(x, y) / 144) < 1e-9 * scale6
        for x in (20.0, 50.5, 70.0):
            for y in caustic_roots_y(x, *EDGES).roots:
                assert abs(poly.value(x, y) / 144) < 1e-9 * scale6

    def test_vertical_roots_centre_on_ridge(self) -> None:
        """Squared J23 roots are symmetric about the squared ridge position."""
        for x in (30.5, 45.5, 60.5):
            roots = caustic_roots_y(x, *EDGES).roots
            assert len(roots) == 2
            centre = 0.5 * (roots[0] ** 2 + roots[1] ** 2)
            assert centre == pytest.approx(ridge_y_squared(x, *EDGES), rel=1e-12)

    def test_tangency_on_top_edge(self) -> None:
        """At J23 = 86 the face (J2, J3, J23) collapses and the roots merge."""
        roots = caustic_roots_x(86.0, *EDGES)
        assert roots.tangent
        assert len(roots.roots) == 1
        assert roots.roots[0] == pytest.approx(30.68, abs=0.01)

    def test_line_outside_strip(self) -> None:
        """Lines beyond the strip miss the caustic."""
        with pytest.raises(NoRoot):
            caustic_roots_x(150.0, *EDGES)


class TestSampleCaustic:
    """Test the closed caustic polyline."""

    def test_generic_caustic(self) -> None:
        """The fig1a caustic is closed, gap free and on V = 0."""
        curve = sample_caustic(*FIG1A, n_points=400)
        assert curve.kind == "caustic"
        assert curve.closed
        assert curve.gaps == 0
        assert np.array_equal(curve.points[0], curve.points[-1])
        assert np.max(np.abs(curve.residuals)) < 1e-9 * 86.0 ** 6
        assert len(curve.branches) == len(curve)
        assert set(curve.branches) == {"minus", "plus"}

    def test_points_inside_screen(self) -> None:
        """Samples stay within the continuous screen rectangle."""
        curve = sample_caustic(*FIG1A, n_points=100)
        params = ScreenParams.from_labels(*FIG1A)
        tol = 1e-9 * params.scale
        assert np.all(curve.points[:, 0] >= params.x_bounds[0] - tol)
        assert np.all(curve.points[:, 0] <= params.x_bounds[1] + tol)
        assert np.all(curve.points[:, 1] >= params.y_bounds[0] - tol)
        assert np.all(curve.points[:, 1] <= params.y_bounds[1] + tol)

    def test_empty_screen(self) -> None:
        """No caustic without a screen."""
        with pytest.raises(EmptyDomain):
            sample_caustic(1, 1, 1, 5)

    def test_chebyshev_nodes(self) -> None:
        """Nodes include both ends and ascend."""
        nodes = chebyshev_nodes(0.0, 1.0, 9)
        assert nodes[0] == pytest.approx(0.0)
        assert nodes[-1] == pytest.approx(1.0)
        assert np.all(np.diff(nodes) > 0)


class TestCorners:
    """Test caustic contact with the screen corners."""

    @pytest.mark.parametrize("name", ["fig1b", "fig1c", "fig1d", "fig4a", "fig4b", "fig5", "fig6"])
    def test_flag_corners_have_zero_volume(self, name) -> None:
        """Every flagged corner is an exact zero of V^2."""
        quad = preset_quadruples(FIGURE_PRESETS[name])[0]
        corners = corner_points(*quad)
        assert sorted(corners) == sorted(FIGURE_PRESETS[name].flags)
        poly = ScreenPolynomial.from_edges(*(h.edge.value for h in quad))
        for x, y in corners.values():
            assert poly.value(x, y) == 0

    def test_reference_corner_positions(self) -> None:
        """B, C and D corners of the single-flag presets."""
        assert corner_points(140, 130, 110, 100) == {"B": (Fraction(10), Fraction(241))}
        assert corner_points(140, 100, 110, 130) == {"C": (Fraction(241), Fraction(10))}
        assert corner_points(140, 110, 100, 130) == {"D": (Fraction(30), Fraction(10))}

    def test_corners_carried_on_sample(self) -> None:
        """The sampled curve records its flags and corners."""
        curve = sample_caustic(140, 110, 100, 130, n_points=64)
        assert curve.flags == frozenset({"D"})
        assert curve.corners == (("D", 30.0, 10.0),)


class TestMirror:
    """Test diagonal and axis reflections."""

    def test_symmetric_screen_mirror_distance(self) -> None:
        """On a j1 = j3 screen the reflected caustic is the caustic."""
        params = ScreenParams.from_labels(100, 150, 100, 210)
        curve = sample_caustic(100, 150, 100, 210, n_points=200)
        assert mirror_hausdorff(curve, params) < 1e-6

    def test_generic_screen_is_not_symmetric(self) -> None:
        """The generic screen has a visibly asymmetric caustic."""
        params = ScreenParams.from_labels(*FIG1A)
        curve = sample_caustic(*FIG1A, n_points=200)
        assert mirror_hausdorff(curve, params) > 1e-3

    def test_mirror_curves(self) -> None:
        """Reflections quadruple the curve list and keep residuals."""
        caustic = sample_caustic(*FIG1A, n_points=64)
        mirrored = mirror_curves([caustic])
        assert len(mirrored) == 4
        np.testing.assert_array_equal(mirrored[1].points[:, 0], -caustic.points[:, 0])
        np.testing.assert_array_equal(mirrored[3].points, -caustic.points)
        np.testing.assert_array_equal(mirrored[2].residuals, caustic.residuals)
        assert mirrored[1].branches[0].endswith("-mx")


class TestSampleRidges:
    """Test sampled ridge polylines."""

    def test_ridges_are_stationary(self) -> None:
        """Transverse derivative residuals are small."""
        rx, ry = sample_ridges(*FIG1A, n_points=100)
        assert rx.kind == "ridge_x"
        assert ry.kind == "ridge_y"
        assert len(rx) > 0 and len(ry) > 0
        assert np.max(np.abs(rx.residuals)) < 1e-9 * 86.0 ** 5
        assert np.max(np.abs(ry.residuals)) < 1e-9 * 86.0 ** 5


class TestCheckCurves:
    """Test the tolerance check on sampled residuals."""

    def test_bounds_scale_with_dimension(self) -> None:
        """V^2 bounds scale as length^6, ridge bounds as length^5."""
        assert residual_bound("caustic", 10.0, 1e-9, 1e-6) == pytest.approx(1e-3)
        assert residual_bound("ridge_x", 10.0, 1e-9, 1e-6) == pytest.approx(1e-1)

    def test_clean_curves_pass(self) -> None:
        """Sampled fig1a curves meet the default tolerances."""
        params = ScreenParams.from_labels(*FIG1A)
        curves = [sample_caustic(*FIG1A, n_points=64), *sample_ridges(*FIG1A, n_points=64)]
        assert check_curves(curves, params, 1e-9, 1e-6) == []

    def test_inflated_residual_reported(self) -> None:
        """A curve whose residual exceeds its bound is named."""
        params = ScreenParams.from_labels(*FIG1A)
        caustic = sample_caustic(*FIG1A, n_points=64)
        rx, ry = sample_ridges(*FIG1A, n_points=64)
        bad = dataclasses.replace(rx, residuals=rx.residuals + params.scale ** 5)
        assert check_curves([caustic, bad, ry], params, 1e-9, 1e-6) == ["ridge_x"]

    def test_empty_curve_skipped(self) -> None:
        """Curves without points are not checked."""
        params = ScreenParams.from_labels(*FIG1A)
        rx, _ = sample_ridges(*FIG1A, n_points=16)
        empty = dataclasses.replace(rx, points=np.zeros((0, 2)), residuals=np.zeros(0))
        assert check_curves([empty], params, 1e-30, 1e-30) == []


FIXED_PRESETS = [name for name, preset in FIGURE_PRESETS.items() if preset.sweep is None]


class TestPresetCurves:
    """Caustic and ridge residuals on every fixed preset."""

    @pytest.mark.parametrize("name", FIXED_PRESETS)
    def test_residuals(self, name) -> None:
        """Caustic points sit on V = 0 and ridge points are stationary."""
        quad = preset_quadruples(FIGURE_PRESETS[name])[0]
        params = ScreenParams.from_labels(*quad)
        caustic = sample_caustic(*quad, n_points=200)
        assert len(caustic) > 0
        assert np.max(np.abs(caustic.residuals)) < 1e-9 * params.scale ** 6
        for ridge in sample_ridges(*quad, n_points=100):
            if len(ridge):
                assert np.max(np.abs(ridge.residuals)) < 1e-9 * params.scale ** 5

    @pytest.mark.parametrize("name", FIXED_PRESETS)
    def test_ridge_between_roots(self, name) -> None:
        """On every line with two crossings the volume maximum lies between them."""
        quad = preset_quadruples(FIGURE_PRESETS[name])[0]
        params = ScreenParams.from_labels(*quad)
        tol = 1e-9 * params.scale
        checked = 0
        for y in np.linspace(*params.y_bounds, 23)[1:-1]:
            try:
                roots = caustic_roots_x(float(y), *params.edges)
            except NoRoot:
                continue
            if roots.tangent or len(roots.roots) < 2:
                continue
            lo, hi = roots.roots
            assert lo - tol <= ridge_x(float(y), *params.edges) <= hi + tol
            checked += 1
        assert checked > 0

    def test_sweep_member_matches_fixed_preset(self) -> None:
        """The j = 100 member of the fig7 sweep is the fig6 caustic."""
        sweep = preset_quadruples(FIGURE_PRESETS["fig7"])
        member = next(q for q in sweep if q[3] == preset_quadruples(FIGURE_PRESETS["fig6"])[0][3])
        a = sample_caustic(*member, n_points=64)
        b = sample_caustic(*preset_quadruples(FIGURE_PRESETS["fig6"])[0], n_points=64)
        np.testing.assert_allclose(a.points, b.points, atol=1e-9)

    @pytest.mark.parametrize("q", range(11))
    def test_sweep_residuals(self, q) -> None:
        """Every fig7 caustic passes the residual bound."""
        quad = preset_quadruples(FIGURE_PRESETS["fig7"])[q]
        params = ScreenParams.from_labels(*quad)
        caustic = sample_caustic(*quad, n_points=64)
        assert np.max(np.abs(caustic.residuals)) < 1e-9 * params.scale ** 6


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
