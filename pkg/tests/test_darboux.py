from dataclasses import replace
from fractions import Fraction

import pytest

from darboux_ladder.algebra import Poly
from darboux_ladder.darboux import (
    BRANCHES,
    Branch,
    factor_pair,
    mu_shift,
    riccati_coeffs,
    target_degree,
    verify_chain,
    verify_commutation,
    verify_factorization,
    verify_pairing,
    verify_riccati_residual,
    verify_swap,
)
from darboux_ladder.families import make_family
from darboux_ladder.utils.exceptions import DegenerateDenominatorError


def test_charlier_raise_n2(charlier1):
    data = factor_pair(charlier1, 2, Branch.RAISE)
    assert data.phi == -1
    assert data.psi == 2
    assert data.mu == 3
    assert data.f == Poly([2, -1])
    assert data.g == Poly([-1])
    assert data.target == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_charlier_closed_forms(n):
    mu = Fraction(5, 2)
    fam = make_family("charlier", {"mu": mu})
    up = factor_pair(fam, n, Branch.RAISE)
    down = factor_pair(fam, n, Branch.LOWER)
    assert up.f == Poly([n, -1])
    assert up.g == Poly([-mu])
    assert up.mu == mu * (n + 1)
    assert down.f == Poly([-mu])
    assert down.g == Poly([n - 1, -1])
    assert down.mu == mu * n


def test_meixner_g1(meixner):
    # -mu (x + gamma + n + 1) at gamma = 1/2, mu = 1/3, n = 2
    data = factor_pair(meixner, 2, Branch.RAISE)
    assert data.f == Poly([2, -1])
    assert data.g == Poly([Fraction(-7, 6), Fraction(-1, 3)])


def test_hahn_raise_n1(hahn003):
    phi, psi = riccati_coeffs(hahn003, 1, Branch.RAISE)
    assert (phi, psi) == (-2, 2)
    data = factor_pair(hahn003, 1, Branch.RAISE)
    assert data.mu == 5
    assert data.f == Poly([1, -3, 1])
    assert data.g == Poly([-1, 1, 1])
    assert (data.f - data.g).delta() == Poly.constant(-4)


def test_hahn_lowering_data(hahn003):
    data = factor_pair(hahn003, 1, Branch.LOWER)
    assert data.f == Poly([-2, 0, 1])
    assert mu_shift(hahn003, 0, Branch.RAISE) == 2
    # finite lattice: mu1(N - 1) = 0
    assert mu_shift(hahn003, 2, Branch.RAISE) == 0


def test_hahn_degenerate_denominator(hahn003):
    with pytest.raises(DegenerateDenominatorError) as info:
        factor_pair(hahn003, 0, Branch.LOWER)
    assert (info.value.n, info.value.branch) == (0, 2)


def test_target_degree():
    assert target_degree(4, Branch.RAISE) == 5
    assert target_degree(4, Branch.LOWER) == 3


@pytest.mark.parametrize("branch", BRANCHES)
@pytest.mark.parametrize("n", range(0, 13))
def test_identity_sweep(family, n, branch):
    try:
        data = factor_pair(family, n, branch)
    except DegenerateDenominatorError:
        pytest.skip("no Darboux step for this cell")
    assert data.f.coefficient(2) == -family.sigma0
    assert data.g.coefficient(2) == -family.sigma0
    assert verify_factorization(family, n, branch, data=data)
    assert verify_swap(family, n, branch, data=data)
    assert verify_commutation(family, n, branch, data=data)
    assert verify_riccati_residual(family, n, branch, data=data)


def test_chain(family):
    assert verify_chain(family, 0, 10)
    assert verify_chain(family, 3, 0)


@pytest.mark.parametrize("n", range(0, 12))
def test_pairing(family, n):
    assert verify_pairing(family, n)


@pytest.mark.parametrize("branch", BRANCHES)
def test_negative_controls(family, branch):
    data = factor_pair(family, 2, branch)
    bad_f = replace(data, f=data.f + 1)
    bad_g = replace(data, g=data.g + 1)
    wrong = family.lambda_of(data.target) + 1

    assert not verify_factorization(family, 2, branch, data=bad_f)
    assert not verify_factorization(family, 2, branch, data=bad_g)
    assert not verify_swap(family, 2, branch, data=data, target_lambda=wrong)
    assert not verify_commutation(family, 2, branch, data=data, target_lambda=wrong)
    assert not verify_riccati_residual(family, 2, branch, data=replace(data, psi=data.psi + 1))
