# Tests for half-integer labels and screen domains
