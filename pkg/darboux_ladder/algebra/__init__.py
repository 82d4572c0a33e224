"""Exact polynomial and difference-operator algebra."""

from .diffop import E, DiffOp, op_combine
from .polyring import NEG_INF, X, Poly, Rational, as_rational, from_descending, poly_arith

__all__ = [
    "E",
    "DiffOp",
    "op_combine",
    "NEG_INF",
    "X",
    "Poly",
    "Rational",
    "as_rational",
    "from_descending",
    "poly_arith",
]
