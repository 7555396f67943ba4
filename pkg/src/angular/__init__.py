# Angular momentum core package for spinscreen
