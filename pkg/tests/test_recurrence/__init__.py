# Tests for the recurrence screen builder
