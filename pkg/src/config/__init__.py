# Configuration package for spinscreen
