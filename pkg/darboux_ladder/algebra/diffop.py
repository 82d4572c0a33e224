"""Difference operators sum_k a_k(x) E^k with polynomial coefficients."""

from typing import Dict, Iterable, Mapping, Tuple, Union

from .polyring import Poly, Scalar

Coefficient = Union[Poly, Scalar]


class DiffOp:
    """Finite combination of shifts; the zero operator has no terms.

    Composition follows (a_j E^j)(b_k E^k) = a_j(x) b_k(x + j) E^(j + k).
    ``a * b`` composes, ``a(p)`` applies to a polynomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, Coefficient], Iterable[Tuple[int, Coefficient]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[int, Poly] = {}
        for order, coeff in items:
            merged[order] = merged.get(order, Poly()) + Poly.coerce(coeff)
        self._terms: Tuple[Tuple[int, Poly], ...] = tuple(
            sorted(((k, p) for k, p in merged.items() if not p.is_zero()), key=lambda kv: -kv[0])
        )

    @classmethod
    def zero(cls) -> "DiffOp":
        """The zero operator."""
        return cls()

    @classmethod
    def identity(cls) -> "DiffOp":
        """E**0."""
        return cls({0: 1})

    @classmethod
    def shift(cls, k: int = 1) -> "DiffOp":
        """E**k."""
        return cls({k: 1})

    @classmethod
    def multiplier(cls, p: Coefficient) -> "DiffOp":
        """Order-0 operator of multiplication by p(x)."""
        return cls({0: p})

    @classmethod
    def coerce(cls, value: Union["DiffOp", Coefficient]) -> "DiffOp":
        """Pass operators through and lift polynomials or scalars to multipliers."""
        if isinstance(value, DiffOp):
            return value
        return cls.multiplier(value)

    @property
    def terms(self) -> Dict[int, Poly]:
        """Shift order to nonzero coefficient polynomial."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        """True when no shift order carries a nonzero coefficient."""
        return not self._terms

    def __add__(self, other: Union["DiffOp", Coefficient]) -> "DiffOp":
        other = DiffOp.coerce(other)
        return DiffOp(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp((k, -p) for k, p in self._terms)

    def __sub__(self, other: Union["DiffOp", Coefficient]) -> "DiffOp":
        return self + (-DiffOp.coerce(other))

    def __rsub__(self, other: Coefficient) -> "DiffOp":
        return DiffOp.coerce(other) - self

    def compose(self, other: "DiffOp") -> "DiffOp":
        """(a E**j)(b E**k) = a b(x + j) E**(j + k), extended bilinearly."""
        out = []
        for j, a in self._terms:
            for k, b in other._terms:
                out.append((j + k, a * b.shift(j)))
        return DiffOp(out)

    def __mul__(self, other: Union["DiffOp", Coefficient]) -> "DiffOp":
        return self.compose(DiffOp.coerce(other))

    def __rmul__(self, other: Coefficient) -> "DiffOp":
        return DiffOp.coerce(other).compose(self)

    def apply(self, p: Poly) -> Poly:
        """Sum of a_k(x) p(x + k)."""
        result = Poly()
        for k, a in self._terms:
            result = result + a * p.shift(k)
        return result

    __call__ = apply

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DiffOp):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {p!r}" for k, p in self._terms)
        return f"DiffOp({{{inner}}})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, p in self._terms:
            shift = "" if k == 0 else ("E" if k == 1 else f"E^{k}")
            if not shift:
                pieces.append(f"({p})")
            elif p == 1:
                pieces.append(shift)
            else:
                pieces.append(f"({p}){shift}")
        return " + ".join(pieces)


E = DiffOp.shift(1)


def op_combine(a: DiffOp, b: DiffOp, kind: str) -> DiffOp:
    """Sum or difference of two operators, selected by kind ("add" or "sub")."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    raise ValueError(f"unknown operator combination: {kind!r}")
