# Tests for configuration and figure presets
