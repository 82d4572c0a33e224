"""Hypergeometric family data and the operators derived from it."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..algebra import E, DiffOp, Poly
from ..utils.exceptions import EigenvalueCollisionError, InadmissibleParameterError

logger = logging.getLogger(__name__)


class FamilyKind(str, Enum):
    """Built-in families plus user supplied (sigma, tau) data."""

    CHARLIER = "charlier"
    MEIXNER = "meixner"
    KRAVCHUK = "kravchuk"
    HAHN = "hahn"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GaugeSequence:
    """Values rho(0), ..., rho(m) of the gauge factor on the lattice."""

    values: Tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]


@dataclass(frozen=True)
class FamilySpec:
    """
    A difference operator sigma(x) Delta Nabla + tau(x) Delta of hypergeometric type.

    ``sigma = sigma0 x^2 + sigma1 x + sigma2`` and ``tau = tau0 x + tau1``; the
    coefficient names follow that highest-power-first convention while the
    underlying :class:`Poly` objects are ascending.
    """

    kind: FamilyKind
    sigma: Poly
    tau: Poly
    params: Tuple[Tuple[str, Fraction], ...] = field(default=())

    def __post_init__(self):
        if self.sigma.degree > 2:
            raise InadmissibleParameterError(f"sigma must have degree <= 2, got {self.sigma}")
        if self.tau.degree != 1:
            raise InadmissibleParameterError(f"tau must have degree exactly 1, got {self.tau}")

    # coefficient views

    @property
    def sigma0(self) -> Fraction:
        return self.sigma.coefficient(2)

    @property
    def sigma1(self) -> Fraction:
        return self.sigma.coefficient(1)

    @property
    def sigma2(self) -> Fraction:
        return self.sigma.coefficient(0)

    @property
    def tau0(self) -> Fraction:
        return self.tau.coefficient(1)

    @property
    def tau1(self) -> Fraction:
        return self.tau.coefficient(0)

    @property
    def param_map(self) -> Dict[str, Fraction]:
        return dict(self.params)

    def param(self, name: str) -> Fraction:
        try:
            return self.param_map[name]
        except KeyError:
            raise KeyError(f"{self.kind.value} family has no parameter {name!r}") from None

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind.value}({inner})"

    # spectral data

    def lambda_of(self, n: int) -> Fraction:
        """Eigenvalue n*tau0 + n(n-1)*sigma0 of the degree-n eigenpolynomial."""
        return n * self.tau0 + n * (n - 1) * self.sigma0

    def operator(self) -> DiffOp:
        """sigma Delta Nabla + tau Delta written in shifts."""
        # Delta Nabla = E - 2 + E^-1, Delta = E - 1
        return DiffOp({1: self.sigma + self.tau, 0: -2 * self.sigma - self.tau, -1: self.sigma})

    def gauge_ratio(self) -> Poly:
        """rho(x+1)/rho(x) = sigma(x) + tau(x)."""
        return self.sigma + self.tau

    def hamiltonian_for(self, lam: Fraction) -> DiffOp:
        """E^2 - [2 sigma(x+1) + tau(x+1) + lam] E + (sigma + tau)(x) sigma(x+1)."""
        s1 = self.sigma.shift(1)
        middle = 2 * s1 + self.tau.shift(1) + lam
        return E * E - middle * E + self.gauge_ratio() * s1

    def hamiltonian(self, n: int) -> DiffOp:
        return self.hamiltonian_for(self.lambda_of(n))

    def gauge_lattice(self, m: int) -> GaugeSequence:
        if m < 0:
            raise ValueError("gauge lattice length must be non-negative")
        ratio = self.gauge_ratio()
        values: List[Fraction] = [Fraction(1)]
        for x in range(m):
            values.append(values[-1] * ratio(x))
        return GaugeSequence(tuple(values))

    def eigenpoly(self, n: int) -> Poly:
        """
        Monic degree-n polynomial solution of (sigma Delta Nabla + tau Delta) Phi = lambda(n) Phi.

        The operator is triangular on the monomial basis with diagonal
        lambda(k), so the coefficients follow by back substitution.
        """
        if n < 0:
            raise ValueError("eigenpolynomial degree must be non-negative")
        lam = self.lambda_of(n)
        for k in range(n):
            if self.lambda_of(k) == lam:
                raise EigenvalueCollisionError(n, k)

        op = self.operator()
        images = [op(Poly.x() ** k) for k in range(n + 1)]
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        for j in range(n - 1, -1, -1):
            rhs = sum((coeffs[k] * images[k].coefficient(j) for k in range(j + 1, n + 1)), Fraction(0))
            coeffs[j] = -rhs / (self.lambda_of(j) - lam)
        return Poly(coeffs)

    def eigen_residual(self, n: int, phi: Optional[Poly] = None) -> Poly:
        phi = self.eigenpoly(n) if phi is None else phi
        return self.operator()(phi) - self.lambda_of(n) * phi

    def gauge_residual(self, n: int, phi: Optional[Poly] = None) -> Poly:
        """rho-free form of H(x;n)(rho Phi) = 0, divided through by rho(x+1)."""
        phi = self.eigenpoly(n) if phi is None else phi
        s1 = self.sigma.shift(1)
        middle = 2 * s1 + self.tau.shift(1) + self.lambda_of(n)
        return self.gauge_ratio().shift(1) * phi.shift(2) - middle * phi.shift(1) + s1 * phi

    def verify_gauge_identity(self, n: int, phi: Optional[Poly] = None) -> bool:
        return self.gauge_residual(n, phi).is_zero()


def params_tuple(params: Mapping[str, Fraction], order: Tuple[str, ...]) -> Tuple[Tuple[str, Fraction], ...]:
    """Freeze named parameters in a fixed, documented order."""
    return tuple((name, Fraction(params[name])) for name in order)
