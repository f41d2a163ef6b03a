"""Generalized Wronskians, Schubert calculus and the Wronski map, computed exactly."""

__version__ = "0.1.0"
