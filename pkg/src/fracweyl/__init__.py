"""Exact arithmetic and corner combinatorics in the fractional Weyl algebras
W^(l) = K[X^{1/l}, X^{-1/l}, Y] with [Y, X] = 1."""

from ._core import BACKEND
from .algebra import SupportPoint, WeylElement, X, Y, commutator, multiply, multiply_oracle, one
from .valuation import Direction, degree, en, leading_part, st, valuation_set

__version__ = "0.1.0"

__all__ = ["BACKEND", "SupportPoint", "WeylElement", "X", "Y", "commutator", "multiply",
           "multiply_oracle", "one", "Direction", "degree", "en", "leading_part", "st",
           "valuation_set"]
