# Tests for exact 6j and 3j evaluation
