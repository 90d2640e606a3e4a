"""Digit-geometry colourings of number pairs, induced word colourings, and
bounded searches for monochromatic configurations."""

__version__ = "0.1.0"
