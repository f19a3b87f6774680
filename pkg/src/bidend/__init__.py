"""Exact computations with bidendriform bialgebras of planar forests and permutations."""

from .core import LinComb, Tensor, VerificationError, parse_lincomb
from .fqsym import F, Perm, parse_perm
from .pforest import DecorationSet, Forest, Tree, parse_forest

__version__ = "0.1.0"

__all__ = ["LinComb", "Tensor", "VerificationError", "parse_lincomb", "F", "Perm", "parse_perm",
           "DecorationSet", "Forest", "Tree", "parse_forest", "__version__"]
