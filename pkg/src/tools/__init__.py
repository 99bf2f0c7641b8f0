"""Command-line schema and handlers."""
