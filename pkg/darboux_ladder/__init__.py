"""Darboux ladder - exact discrete Darboux factorization of hypergeometric difference operators."""

__version__ = "0.1.0"
