"""Numerical verification toolkit for L^p bounds of the Bergman projection on the Hartogs triangle."""

__version__ = "0.1.0"
