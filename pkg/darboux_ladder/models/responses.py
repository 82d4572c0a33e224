"""Response models for reports, factorization records and ladder output."""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from ..darboux import ComparisonReport, FactorizationData
from ..families import FamilySpec
from ..ladder import LadderResult
from ..utils.serialization import format_rational, poly_to_json

Coefficients = List[Union[int, str]]


def family_params(fam: FamilySpec) -> Dict[str, str]:
    return {name: format_rational(value) for name, value in fam.params}


class HealthResponse(BaseModel):
    """Response model for health check endpoints."""

    status: str = Field(..., description="Health status")
    message: str = Field(..., description="Health status message")


class StatsResponse(BaseModel):
    """Server statistics."""

    uptime: float = Field(..., description="Server uptime in seconds")
    total_runs: int = Field(..., description="Number of verification suites run")


class FamilyInfoResponse(BaseModel):
    """A built-in family and its parameters."""

    family: str = Field(..., description="Family name")
    parameters: List[str] = Field(..., description="Parameter names in flag order")
    admissible: str = Field(..., description="Admissible parameter range")


class FactorizationChecks(BaseModel):
    """Identity checks attached to a factorization record."""

    factorization: bool = Field(..., description="H(x;n) - mu = (E+g)(E+f) together with the split system")
    swap: bool = Field(..., description="(E+f)(E+g) = H(x;n') - mu and Delta(f-g) = lambda(n') - lambda(n)")
    riccati: bool = Field(..., description="Discrete Riccati residual vanishes")
    commutation: bool = Field(..., description="H(x;n')(E+f) = (E+f)H(x;n)")


class FactorizationRecord(BaseModel):
    """One (family, n, branch) factorization."""

    family: str
    params: Dict[str, str]
    n: int
    branch: int
    phi: str
    psi: str
    mu: str
    f: Coefficients
    g: Coefficients
    checks: FactorizationChecks
    notes: List[str] = Field(default_factory=list, description="Reference-comparison notes")

    @classmethod
    def from_data(cls, data: FactorizationData, checks: FactorizationChecks, notes: Optional[List[str]] = None):
        fam = data.family
        return cls(
            family=fam.kind.value,
            params=family_params(fam),
            n=data.n,
            branch=int(data.branch),
            phi=format_rational(data.phi),
            psi=format_rational(data.psi),
            mu=format_rational(data.mu),
            f=poly_to_json(data.f),
            g=poly_to_json(data.g),
            checks=checks,
            notes=notes or [],
        )


class LadderRecord(BaseModel):
    """One raising or lowering step."""

    n: int
    direction: str
    c: str
    target: Coefficients

    @classmethod
    def from_result(cls, result: LadderResult):
        return cls(
            n=result.n,
            direction=result.direction.value,
            c=format_rational(result.c),
            target=poly_to_json(result.target),
        )


class GenerateRow(BaseModel):
    """Phi(x;n) with the raising constant c1(n-1) that produced it."""

    n: int
    c: Optional[str] = Field(None, description="c1(n-1); absent for n = 0")
    coefficients: Coefficients
    values: Optional[List[str]] = Field(None, description="Exact values at the requested lattice points")


class GenerateResponse(BaseModel):
    family: str
    params: Dict[str, str]
    rows: List[GenerateRow]
    points: Optional[List[int]] = None
    gauge: Optional[List[str]] = Field(None, description="rho at the requested lattice points, rho(0) = 1")


class MismatchInfo(BaseModel):
    params: Dict[str, str]
    n: int
    computed: str
    printed: str


class ComparisonEntryInfo(BaseModel):
    expression: str
    matched: bool
    samples: int
    known_misprint: bool
    mismatches: List[MismatchInfo]


class ComparisonInfo(BaseModel):
    """Agreement of the printed closed forms with the computed objects."""

    family: str
    consistent: bool
    discrepancies: List[str]
    entries: List[ComparisonEntryInfo]

    @classmethod
    def from_report(cls, report: ComparisonReport):
        return cls.model_validate(report.to_dict())


class CheckOutcome(BaseModel):
    """Result of one check on one cell, e.g. n=3 branch=1."""

    cell: str
    status: str = Field(..., description="pass, fail or skip")
    detail: Optional[str] = None


class CheckSummary(BaseModel):
    """All outcomes of a named check."""

    name: str
    status: str = Field(..., description="pass when nothing failed")
    passed: int
    failed: int
    skipped: int
    outcomes: List[CheckOutcome]


class RunReport(BaseModel):
    """Aggregate of the identity suite for one family."""

    family: str
    params: Dict[str, str]
    n_min: int = 0
    n_max: int
    branches: List[int]
    strict: bool
    inject_fault: Optional[str] = None
    status: str = Field(..., description="pass iff every check passed")
    checks: List[CheckSummary]
    reference: Optional[ComparisonInfo] = None
    elapsed_ms: Optional[float] = Field(None, description="Wall time, only when requested")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class ErrorResponse(BaseModel):
    """Body of a 422 raised by a domain error."""

    detail: str = Field(..., description="Error message")
