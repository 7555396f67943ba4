# Tests for 6j symmetries and degeneracy flags
