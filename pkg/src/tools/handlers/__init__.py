"""Command handlers: table, verify, convert."""
