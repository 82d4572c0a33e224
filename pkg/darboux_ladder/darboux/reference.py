"""
Printed closed forms for Charlier, Meixner and Hahn, and an exact comparison
against the objects computed by :mod:`darboux_ladder.darboux.factorization`.

Templates are transcribed as written, misprints included; the comparison
evaluates both sides at deterministic rational parameter points and reports
each expression as matched or mismatched.
"""

import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from ..algebra import E, DiffOp, Poly, X
from ..families import FamilyKind, FamilySpec, make_family
from ..utils.exceptions import InvalidInputError
from ..utils.serialization import diffop_to_json
from .factorization import Branch, factor_pair, mu_shift, riccati_coeffs

logger = logging.getLogger(__name__)

Value = Union[Poly, Fraction, DiffOp]
Params = Mapping[str, Fraction]
Template = Callable[[Params, int], Value]
Extractor = Callable[[FamilySpec, int], Value]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

# Printed expressions known to disagree with the factorization they belong to.
KNOWN_MISPRINTS: FrozenSet[Tuple[FamilyKind, str]] = frozenset({(FamilyKind.MEIXNER, "g1")})


# Charlier


def _charlier_lambda(p: Params, n: int) -> Fraction:
    return Fraction(-n)


def _charlier_forms() -> Dict[str, Template]:
    lam = _charlier_lambda
    return {
        "lambda": lam,
        "rho_ratio": lambda p, n: Poly.constant(p["mu"]),
        "H": lambda p, n: E * E - (X + p["mu"] + lam(p, n) + 1) * E + p["mu"] * (X + 1),
        "f1": lambda p, n: -X + n,
        "f2": lambda p, n: Poly.constant(-p["mu"]),
        "g1": lambda p, n: Poly.constant(-p["mu"]),
        "g2": lambda p, n: -X + n - 1,
        "mu1": lambda p, n: p["mu"] * n + p["mu"],
        "mu2": lambda p, n: p["mu"] * n,
    }


# Meixner


def _meixner_lambda(p: Params, n: int) -> Fraction:
    return -n * (1 - p["mu"])


def _meixner_forms() -> Dict[str, Template]:
    lam = _meixner_lambda

    def hamiltonian(p: Params, n: int) -> DiffOp:
        mu, gamma = p["mu"], p["gamma"]
        middle = (mu + 1) * X + mu * (gamma + 1) + 1 + lam(p, n)
        return E * E - middle * E + (mu * X * X + mu * (gamma + 1) * X + gamma * mu)

    return {
        "lambda": lam,
        "rho_ratio": lambda p, n: p["mu"] * (X + p["gamma"]),
        "H": hamiltonian,
        "f1": lambda p, n: -X + n,
        "f2": lambda p, n: -p["mu"] * (X + p["gamma"] + n),
        "g1": lambda p, n: -p["mu"] * (X + p["gamma"] + n - 1),
        "g2": lambda p, n: -X + n - 1,
        "mu1": lambda p, n: p["mu"] * (n * p["gamma"] + n * n + n + p["gamma"]),
        "mu2": lambda p, n: p["mu"] * n * (p["gamma"] + n - 1),
    }


# Hahn


def _hahn_lambda(p: Params, n: int) -> Fraction:
    return -n * (n + p["alpha"] + p["beta"] + 1)


def _hahn_psi1(p: Params, n: int) -> Fraction:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return ((n + a + b + 1) * (b + 1) * (N - 1) - lam * (N + a) + HALF * lam * (a + b + 2)) / (2 + 2 * n + a + b)


def _hahn_psi2(p: Params, n: int) -> Fraction:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return (n * (b + 1) * (N - 1) + lam * (N + a) - HALF * lam * (a + b + 2)) / (2 * n + a + b)


def _hahn_hamiltonian(p: Params, n: int) -> DiffOp:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    middle = 2 * X * X + (6 + b - a - 2 * N) * X + (5 + 2 * b - a - 3 * N - b * N - lam)
    free = Poly(
        (
            1 + b - a - 2 * N + N * N - 2 * N * b + a * N - a * b + N * N * b + N * a * b,
            4 + 3 * b - 3 * a - 6 * N + 2 * N * N - 4 * N * b + 2 * N * a - 2 * a * b + N * N * b + N * a * b,
            6 + 3 * b - 3 * a - 6 * N + N * N - 2 * N * b + a * N - a * b,
            4 + b - a - 2 * N,
            1,
        )
    )
    return E * E + middle * E + free


def _hahn_f1(p: Params, n: int) -> Poly:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return X * X - (N + a + n - 1) * X - (b + 1) * (N - 1) - HALF * lam + _hahn_psi1(p, n)


def _hahn_g1(p: Params, n: int) -> Poly:
    b, N = p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return X * X + (3 + n + b - N) * X + 2 + b + n - N - HALF * lam - _hahn_psi1(p, n)


def _hahn_mu1(p: Params, n: int) -> Fraction:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    psi = _hahn_psi1(p, n)
    return (
        psi * (psi - 1 - b * N - n)
        - HALF * lam * (b + 1) * (N - 1)
        - HALF * lam * (N + a - 1)
        + (n + a + b + 1) * (b + 1) * (N - 1)
        + QUARTER * lam * (n + 2) * (n + a + b + 1)
    )


def _hahn_f2(p: Params, n: int) -> Poly:
    b, N = p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return X * X + (2 + b - N + n) * X - (b + 1) * (N - 1) - HALF * lam + _hahn_psi2(p, n)


def _hahn_g2(p: Params, n: int) -> Poly:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    return X * X + (2 - n - N - a) * X - N - a - n + 1 - HALF * lam - _hahn_psi2(p, n)


def _hahn_mu2(p: Params, n: int) -> Fraction:
    a, b, N = p["alpha"], p["beta"], p["N"]
    lam = _hahn_lambda(p, n)
    psi = _hahn_psi2(p, n)
    return (
        psi * (psi + n + a - b * N + b)
        - HALF * lam * (N + a - 1)
        - n * (b + 1) * (N - 1)
        - HALF * lam * (b + 1) * (N - 1)
        - HALF * lam * n
        - QUARTER * lam * lam
    )


def _hahn_forms() -> Dict[str, Template]:
    return {
        "lambda": _hahn_lambda,
        "rho_ratio": lambda p, n: (X + p["beta"] + 1) * (p["N"] - 1 - X),
        "H": _hahn_hamiltonian,
        "psi1": _hahn_psi1,
        "psi2": _hahn_psi2,
        "f1": _hahn_f1,
        "f2": _hahn_f2,
        "g1": _hahn_g1,
        "g2": _hahn_g2,
        "mu1": _hahn_mu1,
        "mu2": _hahn_mu2,
    }


REFERENCE_FORMS: Dict[FamilyKind, Dict[str, Template]] = {
    FamilyKind.CHARLIER: _charlier_forms(),
    FamilyKind.MEIXNER: _meixner_forms(),
    FamilyKind.HAHN: _hahn_forms(),
}

COMPUTED: Dict[str, Extractor] = {
    "lambda": lambda fam, n: fam.lambda_of(n),
    "rho_ratio": lambda fam, n: fam.gauge_ratio(),
    "H": lambda fam, n: fam.hamiltonian(n),
    "psi1": lambda fam, n: riccati_coeffs(fam, n, Branch.RAISE)[1],
    "psi2": lambda fam, n: riccati_coeffs(fam, n, Branch.LOWER)[1],
    "f1": lambda fam, n: factor_pair(fam, n, Branch.RAISE).f,
    "f2": lambda fam, n: factor_pair(fam, n, Branch.LOWER).f,
    "g1": lambda fam, n: factor_pair(fam, n, Branch.RAISE).g,
    "g2": lambda fam, n: factor_pair(fam, n, Branch.LOWER).g,
    "mu1": lambda fam, n: mu_shift(fam, n, Branch.RAISE),
    "mu2": lambda fam, n: mu_shift(fam, n, Branch.LOWER),
}


@dataclass(frozen=True)
class Mismatch:
    """One sample point where computed and printed forms differ."""

    params: Tuple[Tuple[str, Fraction], ...]
    n: int
    computed: str
    printed: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "params": {k: str(v) for k, v in self.params},
            "n": self.n,
            "computed": self.computed,
            "printed": self.printed,
        }


@dataclass
class ComparisonEntry:
    """Agreement of a single printed expression over all sample points."""

    expression: str
    samples: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    known_misprint: bool = False

    @property
    def matched(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, object]:
        return {
            "expression": self.expression,
            "matched": self.matched,
            "samples": self.samples,
            "known_misprint": self.known_misprint,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }


@dataclass
class ComparisonReport:
    """Per-expression comparison of computed objects with the printed forms."""

    kind: FamilyKind
    entries: List[ComparisonEntry] = field(default_factory=list)

    def entry(self, expression: str) -> ComparisonEntry:
        for e in self.entries:
            if e.expression == expression:
                return e
        raise KeyError(expression)

    @property
    def discrepancies(self) -> List[str]:
        return [e.expression for e in self.entries if not e.matched]

    @property
    def unexpected(self) -> List[str]:
        return [e.expression for e in self.entries if not e.matched and not e.known_misprint]

    @property
    def consistent(self) -> bool:
        """True when every mismatch is a known misprint."""
        return not self.unexpected

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.kind.value,
            "consistent": self.consistent,
            "discrepancies": self.discrepancies,
            "entries": [e.to_dict() for e in self.entries],
        }


def sample_points(kind: FamilyKind, count: int, seed: int) -> List[Tuple[Dict[str, Fraction], int]]:
    """Deterministic admissible parameter tuples and degrees n >= 1."""
    rng = random.Random(f"{kind.value}:{seed}")
    points: List[Tuple[Dict[str, Fraction], int]] = []
    for _ in range(count):
        n = rng.randint(1, 8)
        if kind is FamilyKind.CHARLIER:
            params = {"mu": Fraction(rng.randint(1, 40), rng.randint(1, 12))}
        elif kind is FamilyKind.MEIXNER:
            den = rng.randint(2, 13)
            params = {
                "gamma": Fraction(rng.randint(1, 30), rng.randint(1, 9)),
                "mu": Fraction(rng.randint(1, den - 1), den),
            }
        elif kind is FamilyKind.HAHN:
            params = {
                "alpha": Fraction(rng.randint(0, 24), rng.randint(1, 8)),
                "beta": Fraction(rng.randint(0, 24), rng.randint(1, 8)),
                "N": Fraction(rng.randint(2, 10)),
            }
        else:
            raise InvalidInputError(f"no printed reference forms for {kind.value}")
        points.append((params, n))
    return points


def _render(value: Value) -> str:
    """Operators in their JSON form, polynomials and rationals as text."""
    if isinstance(value, DiffOp):
        return json.dumps(diffop_to_json(value), separators=(",", ":"))
    return str(value)


def verify_reference(fam: FamilySpec, n_samples: int = 5, seed: int = 1997, n: Optional[int] = None) -> ComparisonReport:
    """
    Compare every printed expression of ``fam.kind`` with the computed one.

    The family's own parameters (at degree ``n``, default 2) form the first
    sample point, followed by ``n_samples`` deterministic random points.
    """
    if fam.kind not in REFERENCE_FORMS:
        raise InvalidInputError(f"no printed reference forms for {fam.kind.value}")
    templates = REFERENCE_FORMS[fam.kind]
    points: List[Tuple[Dict[str, Fraction], int, FamilySpec]] = [(fam.param_map, 2 if n is None else n, fam)]
    for params, degree in sample_points(fam.kind, n_samples, seed):
        points.append((params, degree, make_family(fam.kind, params)))

    report = ComparisonReport(kind=fam.kind)
    for name in templates:
        report.entries.append(ComparisonEntry(expression=name, known_misprint=(fam.kind, name) in KNOWN_MISPRINTS))

    for params, degree, sample_family in points:
        frozen = tuple(sorted(params.items()))
        for entry in report.entries:
            printed = templates[entry.expression](params, degree)
            computed = COMPUTED[entry.expression](sample_family, degree)
            entry.samples += 1
            if printed != computed:
                entry.mismatches.append(Mismatch(frozen, degree, _render(computed), _render(printed)))

    for name in report.discrepancies:
        logger.info("%s: printed %s disagrees with the computed form", fam.kind.value, name)
    return report
