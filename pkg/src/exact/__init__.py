# Exact evaluation package for spinscreen
