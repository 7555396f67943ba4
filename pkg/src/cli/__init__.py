# Command-line package for spinscreen
