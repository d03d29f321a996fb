# Tests for models module
