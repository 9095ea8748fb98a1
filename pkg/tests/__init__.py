"""scgkit test suite."""
