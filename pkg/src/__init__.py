"""Exact-arithmetic Zernike functions on the unit disk and the unit ball."""

__version__ = "1.0.0"
