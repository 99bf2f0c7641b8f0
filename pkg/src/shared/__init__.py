"""Process-wide memo tables."""
