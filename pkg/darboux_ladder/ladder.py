"""
Raising and lowering of eigenpolynomials through the first-order factors E + f.

Everything is done in rho-free form: dividing (E + f)(rho Phi) by rho(x) gives

    (sigma + tau)(x) Phi(x + 1) + f(x) Phi(x) = c Phi(x; n +/- 1)

so no gauge values are ever evaluated.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import Poly
from .darboux import Branch, factor_pair, mu_shift
from .families import FamilySpec
from .utils.exceptions import (
    InternalIdentityError,
    LadderBoundaryError,
    LadderDegreeError,
    LadderTruncationError,
)

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class LadderResult:
    """c * target = (sigma + tau)(x) Phi(x+1;n) + f(x;n) Phi(x;n), target monic."""

    n: int
    direction: Direction
    c: Fraction
    target: Poly

    @property
    def target_degree(self) -> int:
        return self.n + 1 if self.direction is Direction.UP else self.n - 1


def ladder_image(fam: FamilySpec, f: Poly, phi_n: Poly) -> Poly:
    """(sigma + tau)(x) Phi(x+1) + f(x) Phi(x)."""
    return fam.gauge_ratio() * phi_n.shift(1) + f * phi_n


def _finish(fam: FamilySpec, n: int, direction: Direction, image: Poly, expected: int) -> LadderResult:
    """
    Normalize a ladder image and compare it with the eigen-solve oracle.

    Raises:
        EigenvalueCollisionError: lambda(expected) repeats a lower eigenvalue;
            checked before the degree of the image.
        LadderDegreeError: the image has the wrong degree.
    """
    oracle = fam.eigenpoly(expected)
    if image.degree != expected:
        raise LadderDegreeError(f"{fam.label}: ladder image of degree {image.degree}, expected {expected}")
    c = image.leading
    target = image.scale(1 / c)
    if target != oracle:
        raise InternalIdentityError(f"{fam.label}: ladder image from n={n} is not the monic eigenpolynomial")
    return LadderResult(n=n, direction=direction, c=c, target=target)


def raise_once(fam: FamilySpec, n: int, phi_n: Optional[Poly] = None) -> LadderResult:
    """
    Apply E + f1(x;n) to the degree-n eigenpolynomial.

    The degree n+2 terms cancel because sigma + tau and f1 have opposite
    leading coefficients; the constant c1(n) is the leading coefficient left.
    """
    phi_n = fam.eigenpoly(n) if phi_n is None else phi_n
    data = factor_pair(fam, n, Branch.RAISE)
    return _finish(fam, n, Direction.UP, ladder_image(fam, data.f, phi_n), n + 1)


def lower_once(fam: FamilySpec, n: int, phi_n: Optional[Poly] = None) -> LadderResult:
    """
    Apply E + f2(x;n) to the degree-n eigenpolynomial.

    Raises:
        LadderBoundaryError: n < 1.
        LadderTruncationError: the image vanishes, which happens exactly when
            mu2(n) = 0 (finite lattice families at n = N or N + 1).
    """
    if n < 1:
        raise LadderBoundaryError(f"cannot lower the degree-{n} eigenpolynomial")
    phi_n = fam.eigenpoly(n) if phi_n is None else phi_n
    data = factor_pair(fam, n, Branch.LOWER)
    image = ladder_image(fam, data.f, phi_n)
    if image.is_zero():
        raise LadderTruncationError(n)
    return _finish(fam, n, Direction.DOWN, image, n - 1)


def step(fam: FamilySpec, n: int, direction: Direction, phi_n: Optional[Poly] = None) -> LadderResult:
    if Direction(direction) is Direction.UP:
        return raise_once(fam, n, phi_n)
    return lower_once(fam, n, phi_n)


def generate_family(fam: FamilySpec, n_max: int) -> List[Tuple[Poly, Optional[Fraction]]]:
    """
    Phi(x;0) = 1 followed by repeated raising.

    Entry k is (Phi(x;k), c1(k-1)); the first entry carries no constant.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    phi = Poly.constant(1)
    out: List[Tuple[Poly, Optional[Fraction]]] = [(phi, None)]
    for n in range(n_max):
        result = raise_once(fam, n, phi)
        phi = result.target
        out.append((phi, result.c))
    return out


def roundtrip_check(fam: FamilySpec, n: int) -> bool:
    """
    c1(n) * c2(n+1) = -mu1(n) and lowering the raised polynomial gives Phi(x;n) back.

    A truncated lowering counts as consistent when mu1(n) = 0, since the law
    then holds with c2(n+1) = 0.
    """
    phi_n = fam.eigenpoly(n)
    up = raise_once(fam, n, phi_n)
    mu1 = mu_shift(fam, n, Branch.RAISE)
    try:
        down = lower_once(fam, n + 1, up.target)
    except LadderTruncationError:
        logger.info("%s: lowering from n=%d truncates (mu1(%d) = %s)", fam.label, n + 1, n, mu1)
        return mu1 == 0
    return up.c * down.c == -mu1 and down.target == phi_n


def lowering_law(fam: FamilySpec, n: int) -> bool:
    """c2(n) * c1(n-1) = -mu2(n)."""
    mu2 = mu_shift(fam, n, Branch.LOWER)
    up = raise_once(fam, n - 1)
    try:
        down = lower_once(fam, n, up.target)
    except LadderTruncationError:
        return mu2 == 0
    return down.c * up.c == -mu2
