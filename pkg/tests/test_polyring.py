##
## exact polynomial ring
##

import random
from fractions import Fraction

import pytest
import sympy as sp

from darboux_ladder.algebra import NEG_INF, X, Poly, as_rational, from_descending, poly_arith

x = sp.symbols("x")


def to_sympy(p):
    return sp.Integer(0) + sum(sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))


def random_poly(rng, degree):
    return Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1))


def test_normalization():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]) == Poly.zero()
    assert Poly.zero().coeffs == ()
    assert Poly.zero().degree == NEG_INF
    assert Poly([5]).degree == 0
    assert X.degree == 1


def test_arith():
    p = Poly([1, -3, 1])
    q = Poly([2, -1])
    assert p + q == Poly([3, -4, 1])
    assert p - p == Poly.zero()
    assert q * q == Poly([4, -4, 1])
    assert poly_arith(p, q, "add") == p + q
    assert poly_arith(p, q, "sub") == Poly([-1, -2, 1])
    assert poly_arith(p, q, "mul") == Poly([2, -7, 5, -1])
    assert poly_arith(p, Fraction(1, 2), "scale") == Poly([Fraction(1, 2), Fraction(-3, 2), Fraction(1, 2)])
    assert 2 * X == Poly([0, 2])
    assert 1 - X == Poly([1, -1])


def test_arith_rejects():
    with pytest.raises(ValueError):
        poly_arith(X, X, "div")
    with pytest.raises(TypeError):
        poly_arith(X, X, "scale")
    with pytest.raises(TypeError):
        Poly([0.5])
    with pytest.raises(TypeError):
        as_rational(True)


def test_shift_delta_nabla():
    sq = X * X
    assert sq.shift(1) == Poly([1, 2, 1])
    assert sq.shift(-2) == Poly([4, -4, 1])
    assert sq.shift(0) == sq
    assert sq.delta() == Poly([1, 2])
    assert sq.nabla() == Poly([-1, 2])
    assert Poly.constant(7).delta().is_zero()


def test_evaluate():
    p = Poly([1, -3, 1])
    assert p(2) == -1
    assert p(Fraction(1, 2)) == Fraction(-1, 4)
    assert Poly.zero()(3) == 0


def test_monic_and_descending():
    assert from_descending([2, 0, -4]) == Poly([-4, 0, 2])
    assert from_descending([2, 0, -4]).monic() == Poly([-2, 0, 1])
    assert Poly([1, -3, 1]).is_monic()


def test_str():
    assert str(Poly([1, -3, 1])) == "x^2 - 3*x + 1"
    assert str(Poly([Fraction(1, 3), -2, 1])) == "x^2 - 2*x + 1/3"
    assert str(-X) == "-x"
    assert str(Poly.zero()) == "0"


@pytest.mark.parametrize("seed", range(8))
def test_against_sympy(seed):
    rng = random.Random(seed)
    p = random_poly(rng, rng.randint(0, 5))
    q = random_poly(rng, rng.randint(0, 5))
    k = rng.randint(-3, 3)

    assert sp.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sp.expand(to_sympy(p.shift(k)) - to_sympy(p).subs(x, x + k)) == 0
    assert sp.expand(to_sympy(p.delta()) - (to_sympy(p).subs(x, x + 1) - to_sympy(p))) == 0
    x0 = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
    assert to_sympy(p).subs(x, sp.Rational(x0.numerator, x0.denominator)) == sp.Rational(
        p(x0).numerator, p(x0).denominator
    )


@pytest.mark.parametrize("seed", range(6))
def test_ring_laws(seed):
    rng = random.Random(100 + seed)
    p, q, r = (random_poly(rng, rng.randint(0, 4)) for _ in range(3))
    assert (p * q) * r == p * (q * r)
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p


@pytest.mark.parametrize("j", range(-3, 4))
@pytest.mark.parametrize("k", range(-3, 4))
def test_shift_composes(j, k):
    p = random_poly(random.Random(10 * j + k), 4)
    assert p.shift(j).shift(k) == p.shift(j + k)


@pytest.mark.parametrize("seed", range(8))
def test_delta_nabla_commute(seed):
    rng = random.Random(200 + seed)
    p = random_poly(rng, rng.randint(0, 6))
    second = p.shift(1) - 2 * p + p.shift(-1)
    assert p.nabla().delta() == second
    assert p.delta().nabla() == second
    assert p.nabla() == p - p.shift(-1)


@pytest.mark.parametrize("seed", range(8))
def test_shift_then_evaluate(seed):
    rng = random.Random(300 + seed)
    p = random_poly(rng, rng.randint(0, 5))
    k = rng.randint(-3, 3)
    x0 = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
    assert p.shift(k)(x0) == p(x0 + k)
