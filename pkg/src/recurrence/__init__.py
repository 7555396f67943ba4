# Recurrence screen package for spinscreen
