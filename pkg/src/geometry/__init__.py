# Tetrahedron geometry package for spinscreen
