"""Exact rational scalars and univariate polynomials in the lattice variable x.

Scalars are :class:`fractions.Fraction` values, which are kept in lowest terms
with a positive denominator by construction.  :class:`Poly` stores dense
ascending coefficients and is normalized after every operation, so two
polynomials are equal exactly when their coefficient tuples are equal.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]

# Degree of the zero polynomial.
NEG_INF = float("-inf")


def as_rational(value: Scalar) -> Fraction:
    """Coerce an exact scalar to a Fraction; floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


def _normalize(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [as_rational(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class Poly:
    """Polynomial with exact rational coefficients, ``coeffs[i]`` multiplies x**i."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._coeffs = _normalize(coeffs)

    # constructors

    @classmethod
    def zero(cls) -> "Poly":
        """The zero polynomial, of degree NEG_INF."""
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        """Degree-0 polynomial (zero for value 0)."""
        return cls((value,))

    @classmethod
    def x(cls) -> "Poly":
        """The lattice variable."""
        return cls((0, 1))

    @classmethod
    def coerce(cls, value: Union["Poly", Scalar]) -> "Poly":
        """Pass polynomials through and lift exact scalars to constants."""
        if isinstance(value, Poly):
            return value
        return cls.constant(value)

    @staticmethod
    def _operand(value: object) -> Optional["Poly"]:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly.constant(value)
        return None

    # structure

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Ascending coefficients without trailing zeros."""
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        """Coefficient of the highest power."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._coeffs

    def is_constant(self) -> bool:
        """True when the degree is at most 0."""
        return len(self._coeffs) <= 1

    def is_monic(self) -> bool:
        """True when the leading coefficient is 1."""
        return self.leading == 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i, zero beyond the degree."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    # ring operations

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        operand = Poly._operand(other)
        if operand is None:
            return NotImplemented
        a, b = self._coeffs, operand._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        operand = Poly._operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other: Scalar) -> "Poly":
        operand = Poly._operand(other)
        if operand is None:
            return NotImplemented
        return operand - self

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            if Poly._operand(other) is None:
                return NotImplemented
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Poly":
        """Multiply every coefficient by an exact scalar."""
        factor = as_rational(factor)
        return Poly(c * factor for c in self._coeffs)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    # lattice calculus

    def shift(self, k: int) -> "Poly":
        """Return p(x + k)."""
        if k == 0 or self.is_constant():
            return self
        base = Poly((k, 1))
        result = Poly()
        for c in reversed(self._coeffs):
            result = result * base + c
        return result

    def delta(self) -> "Poly":
        """Forward difference p(x+1) - p(x)."""
        return self.shift(1) - self

    def nabla(self) -> "Poly":
        """Backward difference p(x) - p(x-1)."""
        return self - self.shift(-1)

    def __call__(self, x0: Scalar) -> Fraction:
        """Horner evaluation at an exact point."""
        x0 = as_rational(x0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def monic(self) -> "Poly":
        """Divide by the leading coefficient."""
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic multiple")
        return self.scale(1 / self.leading)

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


X = Poly.x()


def poly_arith(a: Poly, b: Union[Poly, Scalar], kind: str) -> Poly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` by name."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        if isinstance(b, Poly):
            raise TypeError("scale expects a rational factor")
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation: {kind!r}")


def from_descending(coeffs: Sequence[Scalar]) -> Poly:
    """Build a polynomial from highest-power-first coefficients."""
    return Poly(reversed(list(coeffs)))
