#!/usr/bin/env python3
"""
Tests for 3j symbols as limits of 6j symbols with three large entries.
"""

import math

import pytest

from src.angular.half_int import HalfInt
from src.errors import InvalidSchedule, LabelError
from src.exact.limit import limit_labels_from_fd, limit_m_values, threej_limit_estimate

SCHEDULE = [10, 20, 40, 80, 160]


class TestLimitLabels:
    """Test the label conventions."""

    def test_m_values(self) -> None:
        """m1 = l3 - l2, m2 = l1 - l3, m3 = l2 - l1."""
        m = limit_m_values(HalfInt.of(1), HalfInt.of(3), HalfInt.of(2))
        assert m == (HalfInt.of(-1), HalfInt.of(-1), HalfInt.of(2))

    def test_fd_convention(self) -> None:
        """(F, D) maps to offsets (F, -F, D), so m1 = F + D and m2 = F - D."""
        l1, l2, l3 = limit_labels_from_fd(2, 1)
        assert (l1, l2, l3) == (HalfInt.of(2), HalfInt.of(-2), HalfInt.of(1))
        m1, m2, _ = limit_m_values(l1, l2, l3)
        assert m1 == HalfInt.of(3)
        assert m2 == HalfInt.of(1)


class TestLimitEstimate:
    """Test convergence of sqrt(2R+1) * 6j towards the 3j."""

    def test_converges_monotonically(self) -> None:
        """(1 1 2; 0 0 0) is approached with shrinking error."""
        rows = threej_limit_estimate(1, 1, 2, 1, 1, 1, SCHEDULE)
        assert [r.R for r in rows] == SCHEDULE
        assert rows[0].target == pytest.approx(math.sqrt(2 / 15), rel=1e-15)
        errors = [r.abs_error for r in rows]
        assert all(b < a for a, b in zip(errors, errors[1:]))
        assert errors[-1] < 1e-2

    @pytest.mark.parametrize("labels", [
        (1, 1, 2, 1, 1, 1),
        (1, 1, 2, 2, 1, 1),
        (2, 2, 2, 0, 0, 0),
        (1, 2, 3, 0, 0, 0),
        (2, 2, 4, 1, 1, 1),
    ])
    def test_small_cases_converge_monotonically(self, labels) -> None:
        """The error towards a nonzero 3j shrinks at every step of the schedule."""
        rows = threej_limit_estimate(*labels, SCHEDULE)
        assert rows[0].target != 0.0
        errors = [r.abs_error for r in rows]
        assert all(b < a for a, b in zip(errors, errors[1:]))
        assert errors[-1] < errors[0] / 4

    def test_nonzero_projection_target(self) -> None:
        """Offsets (2, 1, 1) give m = (0, 1, -1) and the target (1 1 2; 0 1 -1)."""
        assert limit_m_values(*(HalfInt.of(v) for v in (2, 1, 1))) == (
            HalfInt.of(0), HalfInt.of(1), HalfInt.of(-1))
        rows = threej_limit_estimate(1, 1, 2, 2, 1, 1, SCHEDULE)
        assert rows[0].target == pytest.approx(-math.sqrt(1 / 10), rel=1e-14)

    def test_zero_target(self) -> None:
        """(1 1 1; 0 0 0) = 0 and the scaled 6j decays towards it."""
        rows = threej_limit_estimate(1, 1, 1, 1, 1, 1, SCHEDULE)
        assert all(r.target == 0.0 for r in rows)
        assert all(r.sign_match for r in rows)
        magnitudes = [abs(r.scaled) for r in rows]
        assert all(b <= a for a, b in zip(magnitudes, magnitudes[1:]))

    def test_half_integer_rows_are_finite(self) -> None:
        """Half-integer upper rows work with integer shifts."""
        rows = threej_limit_estimate("1/2", "1/2", 1, 0, 0, "1/2", [10, 100])
        assert all(math.isfinite(r.scaled) for r in rows)
        assert rows[-1].abs_error < rows[0].abs_error

    def test_rejects_uncoupled_row(self) -> None:
        """The upper row must couple."""
        with pytest.raises(LabelError):
            threej_limit_estimate(1, 1, 3, 0, 0, 0, SCHEDULE)

    def test_rejects_invalid_projection(self) -> None:
        """Offsets implying |m| > j raise."""
        with pytest.raises(LabelError):
            threej_limit_estimate(1, 1, 2, 0, 0, 3, SCHEDULE)

    @pytest.mark.parametrize("schedule", [[], [20, 10], [10, 10], [-1]])
    def test_rejects_bad_schedule(self, schedule) -> None:
        """Schedules must be non-empty, strictly increasing and non-negative."""
        with pytest.raises(InvalidSchedule):
            threej_limit_estimate(1, 1, 2, 1, 1, 1, schedule)

    def test_rejects_schedule_leaving_domain(self) -> None:
        """Negative offsets need R large enough."""
        with pytest.raises(InvalidSchedule):
            threej_limit_estimate(1, 1, 2, -1, -1, -1, [0])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
