"""Model unit tests."""
