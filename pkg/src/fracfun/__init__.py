"""Fractional function families built from Caputo and Gray-Zhang operators."""

__version__ = "0.1.0"
