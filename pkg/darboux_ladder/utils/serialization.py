"""Text forms of rationals, polynomials and operators used by the CLI and API."""

import re
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from ..algebra import DiffOp, Poly
from .exceptions import InvalidInputError

JsonCoefficient = Union[int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" text, q omitted when 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or an integer.

    Decimal and exponent notation are refused: inputs are exact end to end.
    """
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise InvalidInputError(f"not an exact rational: {text!r} (expected p/q or an integer)")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InvalidInputError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def parse_coefficients(text: str, expected: int) -> Tuple[Fraction, ...]:
    """Parse a comma separated list of exactly ``expected`` rationals."""
    parts = [p for p in str(text).split(",")]
    if len(parts) != expected:
        raise InvalidInputError(f"expected {expected} comma separated rationals, got {text!r}")
    return tuple(parse_rational(p) for p in parts)


def parse_assignment(text: str) -> Tuple[str, Fraction]:
    """Parse a ``name=p/q`` parameter flag."""
    name, sep, value = str(text).partition("=")
    if not sep or not name.strip():
        raise InvalidInputError(f"parameter must look like name=p/q, got {text!r}")
    return name.strip(), parse_rational(value)


def parse_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive integer range ``a..b``."""
    match = _RANGE_RE.match(str(text))
    if not match:
        raise InvalidInputError(f"points must look like a..b, got {text!r}")
    start, stop = int(match.group(1)), int(match.group(2))
    if stop < start:
        raise InvalidInputError(f"empty point range {text!r}")
    return start, stop


def rational_to_json(value: Fraction) -> JsonCoefficient:
    """Integers stay JSON numbers; other rationals become "p/q" strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def poly_to_json(p: Poly) -> List[JsonCoefficient]:
    return [rational_to_json(c) for c in p.coeffs]


def poly_from_json(values: Sequence[JsonCoefficient]) -> Poly:
    return Poly(parse_rational(str(v)) for v in values)


def diffop_to_json(op: DiffOp) -> Dict[str, List[JsonCoefficient]]:
    """Shift order (string key, highest first) to the ascending coefficient list."""
    return {str(k): poly_to_json(p) for k, p in sorted(op.terms.items(), reverse=True)}
