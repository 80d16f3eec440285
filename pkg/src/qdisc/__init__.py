"""Exact computer algebra for the quantum disc, its two-dimensional
differential calculus, the quantum cones inside it, and its integral."""

from .calculus import V, W, WS, FormZero, OneForm, TwoForm, d, d0, d1, product, wedge
from .disc import X, Z, ZS, DiscElement, monomial, partial, partial_bar, sigma, star
from .evaluator import check, evaluate
from .expr import ParseError, parse, to_text
from .integral import cokernel_reduce, integral_lambda
from .report import Report
from .scalar import Scalar, q_int, q_pow
from .suite import verify_suite

__version__ = "0.1.0"

__all__ = [
    "Scalar", "q_pow", "q_int", "DiscElement", "monomial", "X", "Z", "ZS",
    "star", "sigma", "partial", "partial_bar", "OneForm", "TwoForm", "FormZero",
    "W", "WS", "V", "d", "d0", "d1", "wedge", "product", "integral_lambda",
    "cokernel_reduce", "parse", "to_text", "ParseError", "evaluate", "check",
    "verify_suite", "Report",
]
