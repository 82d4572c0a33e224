"""Built-in hypergeometric families and their parameter validation."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple, Union

from ..algebra import X, Poly, as_rational, from_descending
from ..utils.exceptions import InadmissibleParameterError
from .base import FamilyKind, FamilySpec, params_tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyInfo:
    """Parameter names and the admissible range of a built-in family."""

    kind: FamilyKind
    parameters: Tuple[str, ...]
    admissible: str


def _is_positive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value >= 1


def _charlier(p: Mapping[str, Fraction]) -> Tuple[Poly, Poly]:
    mu = p["mu"]
    if mu == 0:
        raise InadmissibleParameterError("charlier: mu must be nonzero")
    if mu < 0:
        _warn("charlier", "mu > 0")
    return X, mu - X


def _meixner(p: Mapping[str, Fraction]) -> Tuple[Poly, Poly]:
    gamma, mu = p["gamma"], p["mu"]
    if mu == 0:
        raise InadmissibleParameterError("meixner: mu must be nonzero")
    if mu == 1:
        raise InadmissibleParameterError("meixner: mu = 1 makes tau constant")
    if not (0 < mu < 1 and gamma > 0):
        _warn("meixner", "0 < mu < 1, gamma > 0")
    return X, (mu - 1) * X + mu * gamma


def _kravchuk(p: Mapping[str, Fraction]) -> Tuple[Poly, Poly]:
    prob, big_n = p["p"], p["N"]
    if prob == 0 or prob == 1:
        raise InadmissibleParameterError("kravchuk: p must differ from 0 and 1")
    if not _is_positive_integer(big_n):
        raise InadmissibleParameterError(f"kravchuk: N must be a positive integer, got {big_n}")
    if not 0 < prob < 1:
        _warn("kravchuk", "0 < p < 1")
    return X, (big_n * prob - X).scale(1 / (1 - prob))


def _hahn(p: Mapping[str, Fraction]) -> Tuple[Poly, Poly]:
    alpha, beta, big_n = p["alpha"], p["beta"], p["N"]
    if not _is_positive_integer(big_n):
        raise InadmissibleParameterError(f"hahn: N must be a positive integer, got {big_n}")
    if alpha + beta + 2 == 0:
        raise InadmissibleParameterError("hahn: alpha + beta = -2 makes tau constant")
    s = alpha + beta + 1
    if s < 0 and s.denominator == 1:
        raise InadmissibleParameterError(
            f"hahn: alpha + beta = {alpha + beta} makes lambda(n) collide for small n"
        )
    if not (alpha > -1 and beta > -1):
        _warn("hahn", "alpha > -1, beta > -1")
    sigma = -X * X + (big_n + alpha) * X
    tau = (beta + 1) * (big_n - 1) - (alpha + beta + 2) * X
    return sigma, tau


def _warn(name: str, expected: str) -> None:
    logger.warning("%s parameters outside the positivity range (%s); identities still apply", name, expected)


_BUILDERS: Dict[FamilyKind, Callable[[Mapping[str, Fraction]], Tuple[Poly, Poly]]] = {
    FamilyKind.CHARLIER: _charlier,
    FamilyKind.MEIXNER: _meixner,
    FamilyKind.KRAVCHUK: _kravchuk,
    FamilyKind.HAHN: _hahn,
}

FAMILIES: Dict[FamilyKind, FamilyInfo] = {
    FamilyKind.CHARLIER: FamilyInfo(FamilyKind.CHARLIER, ("mu",), "mu > 0"),
    FamilyKind.MEIXNER: FamilyInfo(FamilyKind.MEIXNER, ("gamma", "mu"), "0 < mu < 1, gamma > 0"),
    FamilyKind.KRAVCHUK: FamilyInfo(FamilyKind.KRAVCHUK, ("p", "N"), "0 < p < 1, N a positive integer"),
    FamilyKind.HAHN: FamilyInfo(FamilyKind.HAHN, ("alpha", "beta", "N"), "alpha > -1, beta > -1, N a positive integer"),
}

ParamValue = Union[int, Fraction]


def make_family(kind: Union[FamilyKind, str], params: Optional[Mapping[str, ParamValue]] = None) -> FamilySpec:
    """
    Build a built-in family from named exact parameters.

    Raises:
        InadmissibleParameterError: unknown/missing parameters or values that
            make the operator degenerate.  Values merely outside the usual
            positivity range are accepted with a logged warning.
    """
    kind = FamilyKind(kind)
    if kind is FamilyKind.CUSTOM:
        raise InadmissibleParameterError("custom families are built with custom_family(sigma, tau)")
    info = FAMILIES[kind]
    given = {k: as_rational(v) for k, v in (params or {}).items()}

    unknown = sorted(set(given) - set(info.parameters))
    if unknown:
        raise InadmissibleParameterError(f"{kind.value}: unknown parameter(s) {', '.join(unknown)}")
    missing = [name for name in info.parameters if name not in given]
    if missing:
        raise InadmissibleParameterError(f"{kind.value}: missing parameter(s) {', '.join(missing)}")

    sigma, tau = _BUILDERS[kind](given)
    return FamilySpec(kind=kind, sigma=sigma, tau=tau, params=params_tuple(given, info.parameters))


def custom_family(sigma: Sequence[ParamValue], tau: Sequence[ParamValue]) -> FamilySpec:
    """
    Family from sigma = (s0, s1, s2) and tau = (t0, t1), highest power first.
    """
    if len(sigma) != 3 or len(tau) != 2:
        raise InadmissibleParameterError("custom family needs sigma = (s0, s1, s2) and tau = (t0, t1)")
    if as_rational(tau[0]) == 0:
        raise InadmissibleParameterError("custom family: tau0 must be nonzero")
    names = ("s0", "s1", "s2", "t0", "t1")
    values = [as_rational(v) for v in (*sigma, *tau)]
    return FamilySpec(
        kind=FamilyKind.CUSTOM,
        sigma=from_descending(sigma),
        tau=from_descending(tau),
        params=tuple(zip(names, values)),
    )
