# Symmetries package for spinscreen
