# Tests for tetrahedron geometry on the screen
