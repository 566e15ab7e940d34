"""Exact rewriting engine for finitely presented associative algebras over Q(i)."""

from .arith import GaussianRational, I
from .freealg import Alphabet, NCPoly
from .expr import parse_expr, print_expr
from .rewrite import RewriteSystem, check_confluence, critical_pairs, orient

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "I", "Alphabet", "NCPoly", "parse_expr", "print_expr",
    "RewriteSystem", "check_confluence", "critical_pairs", "orient",
]
