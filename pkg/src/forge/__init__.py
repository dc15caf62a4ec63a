"""Exact construction and verification of composition-algebra structures.

The package builds Hurwitz, para-Hurwitz, Petersson and Okubo algebras from
explicit structure constants over Q(w), the exceptional Lie and Jordan
algebras obtained from pairs of symmetric composition algebras, and checks
their gradings, grading types and Cartan-type decompositions exactly.
"""

__version__ = "0.1.0"
