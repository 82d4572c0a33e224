"""
Discrete Darboux factorization of the conjugated hypergeometric operator.

For each degree n and branch b the operator H(x;n) - mu(n) splits as
(E + g)(E + f) with f, g quadratic (linear when sigma0 = 0) and identical
leading coefficients -sigma0.  Swapping the factors gives H(x;n +/- 1) - mu(n).
Branch 1 raises the degree, branch 2 lowers it.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Optional, Tuple

from ..algebra import E, DiffOp, Poly
from ..families import FamilySpec
from ..utils.exceptions import DegenerateDenominatorError, InternalIdentityError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class Branch(IntEnum):
    """Which linear solution of the discrete Riccati equation is used."""

    RAISE = 1
    LOWER = 2

    @property
    def step(self) -> int:
        return 1 if self is Branch.RAISE else -1


BRANCHES: Tuple[Branch, ...] = (Branch.RAISE, Branch.LOWER)


def target_degree(n: int, branch: Branch) -> int:
    """n' = n + 1 on branch 1 and n - 1 on branch 2."""
    return n + Branch(branch).step


@dataclass(frozen=True)
class FactorizationData:
    """Riccati coefficients, shift constant and factor pair for one (n, branch)."""

    family: FamilySpec
    branch: Branch
    n: int
    phi: Fraction
    psi: Fraction
    mu: Fraction
    f: Poly
    g: Poly

    @property
    def target(self) -> int:
        return target_degree(self.n, self.branch)

    @property
    def riccati_poly(self) -> Poly:
        """phi(x;n) = phi(n) x + psi(n)."""
        return Poly((self.psi, self.phi))

    @property
    def right_factor(self) -> DiffOp:
        return E + self.f

    @property
    def left_factor(self) -> DiffOp:
        return E + self.g


def _phi(fam: FamilySpec, n: int, branch: Branch) -> Fraction:
    if Branch(branch) is Branch.RAISE:
        return fam.tau0 + (n - 1) * fam.sigma0
    return -n * fam.sigma0


def riccati_coeffs(fam: FamilySpec, n: int, branch: Branch) -> Tuple[Fraction, Fraction]:
    """
    Slope and intercept of the linear solution phi(n) x + psi(n).

    Raises:
        DegenerateDenominatorError: when lambda(n +/- 1) == lambda(n), i.e. the
            Darboux step does not exist for this (n, branch).
    """
    branch = Branch(branch)
    s0, s1 = fam.sigma0, fam.sigma1
    t0, t1 = fam.tau0, fam.tau1
    lam = fam.lambda_of(n)
    phi = _phi(fam, n, branch)

    denominator = 2 * phi + 2 * s0 - t0
    if denominator == 0:
        raise DegenerateDenominatorError(n, int(branch))
    numerator = phi * (t1 + t0 - s0 - phi) + lam * s0 + lam * s1 + HALF * lam * t0
    return phi, numerator / denominator


def mu_shift(fam: FamilySpec, n: int, branch: Branch) -> Fraction:
    """Constant mu(n) with H(x;n) - mu(n) = (E + g)(E + f)."""
    phi, psi = riccati_coeffs(fam, n, branch)
    return _mu_from(fam, n, phi, psi)


def _mu_from(fam: FamilySpec, n: int, phi: Fraction, psi: Fraction) -> Fraction:
    s0, s1, s2 = fam.sigma0, fam.sigma1, fam.sigma2
    t1 = fam.tau1
    lam = fam.lambda_of(n)
    return (
        psi * (psi + phi + s1 + s0 - t1)
        - HALF * lam * (s0 + s1 + 2 * s2 + t1)
        - phi * (s2 + t1 + HALF * lam)
        - QUARTER * lam * lam
    )


def _factors_from(fam: FamilySpec, n: int, phi: Fraction, psi: Fraction) -> Tuple[Poly, Poly]:
    s0, s1, s2 = fam.sigma0, fam.sigma1, fam.sigma2
    t0, t1 = fam.tau0, fam.tau1
    half_lam = HALF * fam.lambda_of(n)
    f = Poly((psi - s2 - t1 - half_lam, phi - s1 - t0, -s0))
    g = Poly((-s0 - s1 - s2 - half_lam - phi - psi, -(phi + 2 * s0 + s1), -s0))
    return f, g


def factor_pair(fam: FamilySpec, n: int, branch: Branch) -> FactorizationData:
    """
    Build f(x;n), g(x;n) and mu(n), and check H(x;n) - mu(n) = (E + g)(E + f).

    Raises:
        DegenerateDenominatorError: the step does not exist.
        InternalIdentityError: the factorization residual is nonzero.
    """
    branch = Branch(branch)
    phi, psi = riccati_coeffs(fam, n, branch)
    mu = _mu_from(fam, n, phi, psi)
    f, g = _factors_from(fam, n, phi, psi)
    data = FactorizationData(family=fam, branch=branch, n=n, phi=phi, psi=psi, mu=mu, f=f, g=g)

    residual = factorization_residual(fam, data)
    if not residual.is_zero():
        raise InternalIdentityError(
            f"{fam.label}: H(x;{n}) - mu(n) != (E+g)(E+f) on branch {int(branch)}; residual {residual}"
        )
    logger.debug("factorized %s n=%d branch=%d: f=%s g=%s mu=%s", fam.label, n, branch, f, g, mu)
    return data


# residuals


def factorization_residual(fam: FamilySpec, data: FactorizationData) -> DiffOp:
    """H(x;n) - mu(n) - (E + g)(E + f)."""
    return fam.hamiltonian(data.n) - data.mu - data.left_factor * data.right_factor


def riccati_system_holds(fam: FamilySpec, data: FactorizationData) -> bool:
    """Both lines of the split system: the E coefficient and the product f g."""
    s1 = fam.sigma.shift(1)
    first = data.f.shift(1) + data.g + 2 * s1 + fam.tau.shift(1) + fam.lambda_of(data.n)
    second = data.f * data.g - fam.gauge_ratio() * s1 + data.mu
    return first.is_zero() and second.is_zero()


def swap_residual(fam: FamilySpec, data: FactorizationData, target_lambda: Optional[Fraction] = None) -> DiffOp:
    """(E + f)(E + g) - (H(x;n') - mu(n))."""
    lam = fam.lambda_of(data.target) if target_lambda is None else target_lambda
    return data.right_factor * data.left_factor - (fam.hamiltonian_for(lam) - data.mu)


def eigenvalue_shift_holds(fam: FamilySpec, data: FactorizationData, target_lambda: Optional[Fraction] = None) -> bool:
    """Delta(f - g) is the constant lambda(n') - lambda(n)."""
    lam = fam.lambda_of(data.target) if target_lambda is None else target_lambda
    return (data.f - data.g).delta() == Poly.constant(lam - fam.lambda_of(data.n))


def commutation_residual(fam: FamilySpec, data: FactorizationData, target_lambda: Optional[Fraction] = None) -> DiffOp:
    """H(x;n')(E + f) - (E + f)H(x;n)."""
    lam = fam.lambda_of(data.target) if target_lambda is None else target_lambda
    return fam.hamiltonian_for(lam) * data.right_factor - data.right_factor * fam.hamiltonian(data.n)


def riccati_residual(fam: FamilySpec, data: FactorizationData) -> Poly:
    """Left side of the discrete Riccati equation for phi(x;n) = phi x + psi."""
    sigma, tau = fam.sigma, fam.tau
    s1 = sigma.shift(1)
    lam = fam.lambda_of(data.n)
    phi = data.riccati_poly
    phi1 = phi.shift(1)
    return (
        HALF * lam * (s1 + sigma + tau)
        + QUARTER * lam * lam
        + data.mu
        + (sigma + tau) * phi1
        - s1 * phi
        + HALF * lam * phi.delta()
        - phi * phi1
    )


# verifiers


def _resolve(fam: FamilySpec, n: int, branch: Branch, data: Optional[FactorizationData]) -> FactorizationData:
    return factor_pair(fam, n, branch) if data is None else data


def verify_factorization(fam: FamilySpec, n: int, branch: Branch, *, data: Optional[FactorizationData] = None) -> bool:
    data = _resolve(fam, n, branch, data)
    return factorization_residual(fam, data).is_zero() and riccati_system_holds(fam, data)


def verify_swap(
    fam: FamilySpec,
    n: int,
    branch: Branch,
    *,
    data: Optional[FactorizationData] = None,
    target_lambda: Optional[Fraction] = None,
) -> bool:
    data = _resolve(fam, n, branch, data)
    return swap_residual(fam, data, target_lambda).is_zero() and eigenvalue_shift_holds(fam, data, target_lambda)


def verify_commutation(
    fam: FamilySpec,
    n: int,
    branch: Branch,
    *,
    data: Optional[FactorizationData] = None,
    target_lambda: Optional[Fraction] = None,
) -> bool:
    data = _resolve(fam, n, branch, data)
    return commutation_residual(fam, data, target_lambda).is_zero()


def verify_riccati_residual(fam: FamilySpec, n: int, branch: Branch, *, data: Optional[FactorizationData] = None) -> bool:
    data = _resolve(fam, n, branch, data)
    return riccati_residual(fam, data).is_zero()


def verify_chain(fam: FamilySpec, n0: int, steps: int) -> bool:
    """
    Dressing chain along branch 1 with j -> n0 + j and alpha(j) = 0:

        f(x;j) + g(x+1;j) = f(x+1;j+1) + g(x;j+1)
        f(x;j) g(x;j) = f(x;j+1) g(x;j+1) + mu(j+1) - mu(j)
    """
    if steps <= 0:
        return True
    links = [factor_pair(fam, n0 + j, Branch.RAISE) for j in range(steps + 1)]
    return all(_chain_link_holds(a, b) for a, b in zip(links, links[1:]))


def _chain_link_holds(cur: FactorizationData, nxt: FactorizationData) -> bool:
    first = cur.f + cur.g.shift(1) - nxt.f.shift(1) - nxt.g
    second = cur.f * cur.g - nxt.f * nxt.g - nxt.mu + cur.mu
    return first.is_zero() and second.is_zero()


def verify_pairing(fam: FamilySpec, n: int) -> bool:
    """g1(n) = f2(n+1), f1(n) = g2(n+1) and mu1(n) = mu2(n+1)."""
    up = factor_pair(fam, n, Branch.RAISE)
    down = factor_pair(fam, n + 1, Branch.LOWER)
    return up.g == down.f and up.f == down.g and up.mu == down.mu
