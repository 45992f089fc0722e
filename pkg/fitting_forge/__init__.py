"""
fitting_forge: Fitting ideals, diagonalizing blow-ups and genus-one chart calculus
"""

__version__ = "0.1.0"
