"""Discrete Darboux factorization, its identities and the printed reference forms."""

from .factorization import (
    BRANCHES,
    Branch,
    FactorizationData,
    commutation_residual,
    eigenvalue_shift_holds,
    factor_pair,
    factorization_residual,
    mu_shift,
    riccati_coeffs,
    riccati_residual,
    riccati_system_holds,
    swap_residual,
    target_degree,
    verify_chain,
    verify_commutation,
    verify_factorization,
    verify_pairing,
    verify_riccati_residual,
    verify_swap,
)
from .reference import KNOWN_MISPRINTS, REFERENCE_FORMS, ComparisonReport, sample_points, verify_reference

__all__ = [
    "BRANCHES",
    "Branch",
    "FactorizationData",
    "commutation_residual",
    "eigenvalue_shift_holds",
    "factor_pair",
    "factorization_residual",
    "mu_shift",
    "riccati_coeffs",
    "riccati_residual",
    "riccati_system_holds",
    "swap_residual",
    "target_degree",
    "verify_chain",
    "verify_commutation",
    "verify_factorization",
    "verify_pairing",
    "verify_riccati_residual",
    "verify_swap",
    "KNOWN_MISPRINTS",
    "REFERENCE_FORMS",
    "ComparisonReport",
    "sample_points",
    "verify_reference",
]
