"""Exact toolkit for automorphism-group bounds of ordinary even-genus curves."""

__version__ = "0.1.0"
