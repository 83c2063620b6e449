"""Exact computations on Weierstrass cycles of pointed curves."""

__version__ = "0.1.0"
