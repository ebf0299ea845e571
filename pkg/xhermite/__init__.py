"""Exact and numerical toolkit for the double-indexed X_{m1,m2} Hermite EOP and their oscillator extensions."""

__version__ = "0.1.0"
