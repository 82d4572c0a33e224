"""Request models shared by the CLI and the HTTP API."""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..darboux import Branch
from ..families import FamilyKind, FamilySpec, custom_family, make_family
from ..ladder import Direction
from ..utils.exceptions import InvalidInputError
from ..utils.serialization import parse_coefficients, parse_range, parse_rational


class FamilyRequest(BaseModel):
    """Family selection: a built-in kind with named parameters, or custom sigma/tau."""

    family: FamilyKind = Field(..., description="charlier, meixner, kravchuk, hahn or custom")
    params: Dict[str, str] = Field(default_factory=dict, description="Parameters as name -> 'p/q'")
    sigma: Optional[str] = Field(None, description="Custom sigma as 's0,s1,s2' (highest power first)")
    tau: Optional[str] = Field(None, description="Custom tau as 't0,t1' (highest power first)")

    @field_validator("params")
    @classmethod
    def validate_params(cls, v):
        """Every value must be an exact rational."""
        for name, value in v.items():
            try:
                parse_rational(value)
            except InvalidInputError as e:
                raise ValueError(f"{name}: {e}") from e
        return v

    @model_validator(mode="after")
    def validate_custom(self):
        if self.family is FamilyKind.CUSTOM:
            if self.sigma is None or self.tau is None:
                raise ValueError("custom family requires sigma and tau")
            if self.params:
                raise ValueError("custom family takes sigma and tau, not params")
        elif self.sigma is not None or self.tau is not None:
            raise ValueError("sigma and tau are only accepted for the custom family")
        return self

    def build(self) -> FamilySpec:
        if self.family is FamilyKind.CUSTOM:
            return custom_family(parse_coefficients(self.sigma, 3), parse_coefficients(self.tau, 2))
        return make_family(self.family, {k: parse_rational(v) for k, v in self.params.items()})


class VerifyRequest(FamilyRequest):
    """Run the identity suite over n = 0..n_max."""

    n_max: int = Field(12, ge=0, le=64, description="Largest degree swept")
    branches: List[Branch] = Field(default_factory=lambda: [Branch.RAISE, Branch.LOWER])
    strict: bool = Field(False, description="Treat degenerate (n, branch) cells as failures")
    inject_fault: Optional[str] = Field(None, description="Negative control: f, g or lambda")

    @field_validator("inject_fault")
    @classmethod
    def validate_fault(cls, v):
        if v is not None and v not in ("f", "g", "lambda"):
            raise ValueError("inject_fault must be one of: f, g, lambda")
        return v


class FactorizeRequest(FamilyRequest):
    n: int = Field(..., ge=0, description="Degree n")
    branches: List[Branch] = Field(default_factory=lambda: [Branch.RAISE])
    strict: bool = Field(False, description="Fail instead of skipping a degenerate branch")


class LadderRequest(FamilyRequest):
    n: int = Field(..., ge=0, description="Degree of the starting eigenpolynomial")
    direction: Direction = Field(Direction.UP)

    @model_validator(mode="after")
    def validate_boundary(self):
        if self.direction is Direction.DOWN and self.n == 0:
            raise ValueError("cannot lower the degree-0 eigenpolynomial")
        return self


class GenerateRequest(FamilyRequest):
    n_max: int = Field(12, ge=0, le=64)
    points: Optional[str] = Field(None, description="Inclusive lattice range 'a..b'")

    @field_validator("points")
    @classmethod
    def validate_points(cls, v):
        if v is not None:
            try:
                parse_range(v)
            except InvalidInputError as e:
                raise ValueError(str(e)) from e
        return v

    def point_range(self) -> Optional[Tuple[int, int]]:
        return None if self.points is None else parse_range(self.points)
