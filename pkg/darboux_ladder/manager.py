"""Suite runner shared by the CLI and the HTTP front end."""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple, Union

from .config import VerifyConfig
from .darboux import (
    BRANCHES,
    REFERENCE_FORMS,
    Branch,
    ComparisonReport,
    eigenvalue_shift_holds,
    factor_pair,
    factorization_residual,
    mu_shift,
    riccati_system_holds,
    swap_residual,
    verify_chain,
    verify_commutation,
    verify_pairing,
    verify_reference,
    verify_riccati_residual,
)
from .families import FamilySpec
from .ladder import generate_family, lowering_law, raise_once, roundtrip_check, step
from .models.requests import FactorizeRequest, GenerateRequest, LadderRequest, VerifyRequest
from .models.responses import (
    CheckOutcome,
    CheckSummary,
    ComparisonInfo,
    FactorizationChecks,
    FactorizationRecord,
    GenerateResponse,
    GenerateRow,
    LadderRecord,
    RunReport,
    family_params,
)
from .utils.exceptions import (
    DegenerateDenominatorError,
    EigenvalueCollisionError,
    InternalIdentityError,
    LadderError,
)
from .utils.serialization import format_rational, poly_to_json

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"

BRANCH_CHECKS = ("factorization", "split_system", "swap", "eigenvalue_shift", "riccati", "commutation")
DEGREE_CHECKS = ("gauge", "ladder", "roundtrip", "lowering_law", "pairing")
CHECKS = BRANCH_CHECKS + DEGREE_CHECKS + ("chain", "reference")

FAULTS = ("f", "g", "lambda")

# exceptions meaning "this cell has no Darboux step", as opposed to a failed identity
_MISSING = (DegenerateDenominatorError, EigenvalueCollisionError)


@dataclass(frozen=True)
class Outcome:
    check: str
    cell: str
    status: str
    detail: Optional[str] = None


@dataclass(frozen=True)
class Truncated:
    """A ladder cell where lowering annihilates Phi and the law holds with c2 = 0."""

    notice: str


CheckResult = Union[bool, Truncated]


def _guarded(check: str, cell: str, strict: bool, fn: Callable[[], CheckResult]) -> Outcome:
    try:
        result = fn()
    except _MISSING as e:
        logger.info("%s %s: %s", check, cell, e)
        return Outcome(check, cell, FAIL if strict else SKIP, str(e))
    except (LadderError, InternalIdentityError) as e:
        return Outcome(check, cell, FAIL, str(e))
    if isinstance(result, Truncated):
        logger.info("%s %s: %s", check, cell, result.notice)
        return Outcome(check, cell, SKIP, result.notice)
    return Outcome(check, cell, PASS if result else FAIL)


def _branch_cell(fam: FamilySpec, n: int, branch: Branch, strict: bool, fault: Optional[str]) -> List[Outcome]:
    """All per-(n, branch) identities, optionally on deliberately corrupted data."""
    cell = f"n={n} branch={int(branch)}"
    try:
        data = factor_pair(fam, n, branch)
    except _MISSING as e:
        logger.info("skipping %s %s: %s", fam.label, cell, e)
        return [Outcome(name, cell, FAIL if strict else SKIP, str(e)) for name in BRANCH_CHECKS]
    except InternalIdentityError as e:
        return [Outcome(name, cell, FAIL, str(e)) for name in BRANCH_CHECKS]

    target_lambda: Optional[Fraction] = None
    if fault == "f":
        data = replace(data, f=data.f + 1)
    elif fault == "g":
        data = replace(data, g=data.g + 1)
    elif fault == "lambda":
        target_lambda = fam.lambda_of(data.target) + 1

    results: Dict[str, bool] = {
        "factorization": factorization_residual(fam, data).is_zero(),
        "split_system": riccati_system_holds(fam, data),
        "swap": swap_residual(fam, data, target_lambda).is_zero(),
        "eigenvalue_shift": eigenvalue_shift_holds(fam, data, target_lambda),
        "riccati": verify_riccati_residual(fam, n, branch, data=data),
        "commutation": verify_commutation(fam, n, branch, data=data, target_lambda=target_lambda),
    }
    return [Outcome(name, cell, PASS if results[name] else FAIL) for name in BRANCH_CHECKS]


def _roundtrip(fam: FamilySpec, n: int) -> CheckResult:
    ok = roundtrip_check(fam, n)
    if ok and mu_shift(fam, n, Branch.RAISE) == 0:
        return Truncated(f"lowering from n={n + 1} truncates; mu1({n}) = 0")
    return ok


def _lowering(fam: FamilySpec, n: int) -> CheckResult:
    ok = lowering_law(fam, n)
    if ok and mu_shift(fam, n, Branch.LOWER) == 0:
        return Truncated(f"lowering from n={n} truncates; mu2({n}) = 0")
    return ok


# branches each degree check draws its factor pairs from
_NEEDS: Dict[str, FrozenSet[Branch]] = {
    "gauge": frozenset(),
    "ladder": frozenset({Branch.RAISE}),
    "roundtrip": frozenset(BRANCHES),
    "pairing": frozenset(BRANCHES),
    "lowering_law": frozenset(BRANCHES),
}


def _degree_cell(fam: FamilySpec, n: int, n_max: int, strict: bool, branches: FrozenSet[Branch]) -> List[Outcome]:
    """
    Gauge identity at n plus the ladder checks linking n and n + 1.

    A check whose branches were not all requested is reported as skipped.
    """
    cell = f"n={n}"
    runs: List[Tuple[str, Callable[[], CheckResult]]] = [("gauge", lambda: fam.verify_gauge_identity(n))]
    if n < n_max:
        # raise_once compares its image with the eigen-solve oracle
        runs.append(("ladder", lambda: raise_once(fam, n).target_degree == n + 1))
        runs.append(("roundtrip", lambda: _roundtrip(fam, n)))
        runs.append(("pairing", lambda: verify_pairing(fam, n)))
    if n >= 1:
        runs.append(("lowering_law", lambda: _lowering(fam, n)))

    out = []
    for check, fn in runs:
        missing = _NEEDS[check] - branches
        if missing:
            detail = "needs branch " + ",".join(str(int(b)) for b in sorted(missing))
            out.append(Outcome(check, cell, SKIP, detail))
        else:
            out.append(_guarded(check, cell, strict, fn))
    return out


def _summarize(outcomes: List[Outcome]) -> List[CheckSummary]:
    by_check: Dict[str, List[Outcome]] = {name: [] for name in CHECKS}
    for o in outcomes:
        by_check[o.check].append(o)
    summaries = []
    for name in CHECKS:
        rows = by_check[name]
        failed = sum(1 for o in rows if o.status == FAIL)
        summaries.append(
            CheckSummary(
                name=name,
                status=FAIL if failed else PASS,
                passed=sum(1 for o in rows if o.status == PASS),
                failed=failed,
                skipped=sum(1 for o in rows if o.status == SKIP),
                outcomes=[CheckOutcome(cell=o.cell, status=o.status, detail=o.detail) for o in rows],
            )
        )
    return summaries


def reference_notes(report: ComparisonReport, branch: Optional[Branch] = None) -> List[str]:
    """One line per mismatching printed expression, restricted to ``branch`` when given."""
    notes = []
    for entry in report.entries:
        if entry.matched:
            continue
        suffix = entry.expression[-1]
        if branch is not None and suffix in "12" and suffix != str(int(branch)):
            continue
        kind = "known misprint" if entry.known_misprint else "unexpected mismatch"
        sample = entry.mismatches[0]
        notes.append(
            f"{entry.expression}: printed {sample.printed} differs from computed {sample.computed} ({kind})"
        )
    return notes


class VerificationManager:
    """Runs identity suites and single operations for one process."""

    def __init__(self, settings: Optional[VerifyConfig] = None):
        self.settings = settings or VerifyConfig()
        self.start_time = time.time()
        self.total_runs = 0
        self._lock = threading.Lock()

    def configure(self, settings: VerifyConfig) -> None:
        self.settings = settings

    @property
    def uptime(self) -> float:
        """Get server uptime in seconds."""
        return time.time() - self.start_time

    def _reference(self, fam: FamilySpec, n: Optional[int] = None) -> ComparisonReport:
        return verify_reference(fam, n_samples=self.settings.reference_samples, seed=self.settings.sample_seed, n=n)

    def run_suite(self, request: VerifyRequest, timing: bool = False) -> RunReport:
        """
        Evaluate every check for n = 0..n_max on the requested branches.

        Cells run on a thread pool; ``map`` keeps submission order so the
        report is identical between runs.
        """
        started = time.perf_counter()
        fam = request.build()
        branches = sorted(set(request.branches))
        strict = request.strict
        fault = request.inject_fault
        if fault is not None:
            logger.warning("injecting fault %r into %s", fault, fam.label)

        jobs: List[Callable[[], List[Outcome]]] = []
        for n in range(request.n_max + 1):
            for branch in branches:
                jobs.append(lambda n=n, branch=branch: _branch_cell(fam, n, branch, strict, fault))
        for n in range(request.n_max + 1):
            jobs.append(lambda n=n: _degree_cell(fam, n, request.n_max, strict, frozenset(branches)))

        with ThreadPoolExecutor(max_workers=self.settings.max_workers) as pool:
            cells = list(pool.map(lambda job: job(), jobs))
        outcomes = [o for cell in cells for o in cell]

        steps = min(self.settings.chain_steps, request.n_max)
        outcomes.append(_guarded("chain", f"n=0..{steps}", strict, lambda: verify_chain(fam, 0, steps)))

        reference: Optional[ComparisonInfo] = None
        if fam.kind in REFERENCE_FORMS:
            try:
                report = self._reference(fam)
            except _MISSING as e:
                outcomes.append(Outcome("reference", fam.kind.value, FAIL if strict else SKIP, str(e)))
            else:
                reference = ComparisonInfo.from_report(report)
                detail = "; ".join(reference_notes(report)) or None
                outcomes.append(Outcome("reference", fam.kind.value, PASS if report.consistent else FAIL, detail))
        else:
            outcomes.append(Outcome("reference", fam.kind.value, SKIP, "no printed reference forms"))

        checks = _summarize(outcomes)
        status = PASS if all(c.status == PASS for c in checks) else FAIL
        elapsed = (time.perf_counter() - started) * 1000
        logger.info("suite %s n=0..%d: %s in %.1f ms", fam.label, request.n_max, status, elapsed)

        with self._lock:
            self.total_runs += 1

        return RunReport(
            family=fam.kind.value,
            params=family_params(fam),
            n_max=request.n_max,
            branches=[int(b) for b in branches],
            strict=strict,
            inject_fault=fault,
            status=status,
            checks=checks,
            reference=reference,
            elapsed_ms=round(elapsed, 3) if timing else None,
        )

    def factorize(self, request: FactorizeRequest) -> List[FactorizationRecord]:
        """
        Factorization records for the requested branches.

        Raises:
            DegenerateDenominatorError: a branch has no Darboux step and
                ``strict`` is set.  Without ``strict`` the branch is skipped.
        """
        fam = request.build()
        report: Optional[ComparisonReport] = None
        if fam.kind in REFERENCE_FORMS:
            try:
                report = self._reference(fam)
            except _MISSING as e:
                logger.info("reference comparison unavailable for %s: %s", fam.label, e)

        records = []
        for branch in sorted(set(request.branches)):
            try:
                data = factor_pair(fam, request.n, branch)
            except DegenerateDenominatorError as e:
                if request.strict:
                    raise
                logger.warning("skipping %s: %s", fam.label, e)
                continue
            checks = FactorizationChecks(
                factorization=riccati_system_holds(fam, data) and factorization_residual(fam, data).is_zero(),
                swap=swap_residual(fam, data).is_zero() and eigenvalue_shift_holds(fam, data),
                riccati=verify_riccati_residual(fam, request.n, branch, data=data),
                commutation=verify_commutation(fam, request.n, branch, data=data),
            )
            notes = reference_notes(report, branch) if report is not None else []
            records.append(FactorizationRecord.from_data(data, checks, notes))
        return records

    def ladder(self, request: LadderRequest) -> LadderRecord:
        fam = request.build()
        return LadderRecord.from_result(step(fam, request.n, request.direction))

    def generate(self, request: GenerateRequest) -> GenerateResponse:
        fam = request.build()
        span: Optional[Tuple[int, int]] = request.point_range()
        points = list(range(span[0], span[1] + 1)) if span else None

        rows = []
        for k, (phi, c) in enumerate(generate_family(fam, request.n_max)):
            rows.append(
                GenerateRow(
                    n=k,
                    c=None if c is None else format_rational(c),
                    coefficients=poly_to_json(phi),
                    values=[format_rational(phi(x)) for x in points] if points else None,
                )
            )

        gauge = None
        if span is not None:
            if span[0] >= 0:
                lattice = fam.gauge_lattice(span[1])
                gauge = [format_rational(lattice[x]) for x in points]
            else:
                logger.warning("rho is only tabulated on x >= 0; omitting gauge values for %s", request.points)

        return GenerateResponse(
            family=fam.kind.value,
            params=family_params(fam),
            rows=rows,
            points=points,
            gauge=gauge,
        )


# Global verification manager instance
verification_manager = VerificationManager()
