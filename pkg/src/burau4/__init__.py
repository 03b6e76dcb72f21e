"""Exact tools around the reduced Burau representation of the braid group B4."""

__version__ = "0.1.0"
