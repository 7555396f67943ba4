# spinscreen - Main package
