"""Verification suites used by the verify command."""
