"""Custom exceptions for the Darboux ladder toolkit."""

from typing import Optional


class DarbouxError(Exception):
    """Base exception for all toolkit errors."""
    pass


class InvalidInputError(DarbouxError):
    """Exception raised when a flag or text form cannot be parsed."""
    pass


class InadmissibleParameterError(DarbouxError):
    """Exception raised when family parameters make the operator meaningless."""
    pass


class EigenvalueCollisionError(DarbouxError):
    """Exception raised when lambda(n) equals lambda(k) for some k < n."""

    def __init__(self, n: int, k: int):
        super().__init__(f"lambda({n}) coincides with lambda({k}); no monic eigenpolynomial of degree {n}")
        self.n = n
        self.k = k


class DegenerateDenominatorError(DarbouxError):
    """Exception raised when the Darboux step does not exist for (n, branch)."""

    def __init__(self, n: int, branch: int, message: Optional[str] = None):
        super().__init__(
            message or f"degenerate Riccati denominator at n={n}, branch={branch}: lambda(n') == lambda(n)"
        )
        self.n = n
        self.branch = branch


class InternalIdentityError(DarbouxError):
    """Exception raised when a constructed object fails its defining identity."""
    pass


class LadderError(DarbouxError):
    """Base exception for ladder steps."""
    pass


class LadderDegreeError(LadderError):
    """Exception raised when a ladder image has an unexpected degree."""
    pass


class LadderBoundaryError(LadderError):
    """Exception raised when lowering is requested below degree zero."""
    pass


class LadderTruncationError(LadderError):
    """Exception raised when the lowering operator annihilates the eigenpolynomial."""

    def __init__(self, n: int):
        super().__init__(f"lowering annihilates the degree-{n} eigenpolynomial (finite lattice truncation)")
        self.n = n
