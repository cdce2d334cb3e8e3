"""Exact structure theory and dimension <= 10 classification of nilpotent
symplectic alternating algebras, with the GF(3) group correspondence."""

__version__ = "0.1.0"
