# Test package for spinscreen
