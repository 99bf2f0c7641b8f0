"""Errors, fixture parsing and table rendering."""
