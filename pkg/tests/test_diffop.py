##
## shift operator algebra
##

import random
from fractions import Fraction

import pytest

from darboux_ladder.algebra import E, DiffOp, Poly, X, op_combine


def test_composition_shifts_coefficients():
    assert E * E == DiffOp.shift(2)
    assert E * X == (X + 1) * E
    assert (X * E) * (X * E) == DiffOp({2: X * (X + 1)})
    assert DiffOp.identity() * E == E


def test_composition_is_not_commutative():
    assert E * X != X * E
    assert op_combine(E * X, X * E, "sub") == E


def test_compose_factor_pair():
    # H(x;2) - mu1(2) for Charlier mu = 1
    left = E - 1
    right = E - X + 2
    assert left * right == E * E - X * E + (X - 2)


def test_combine_and_zero():
    a = E * E + X
    b = X * E
    assert op_combine(a, b, "add") == DiffOp({2: 1, 1: X, 0: X})
    assert op_combine(a, a, "sub").is_zero()
    assert op_combine(a, a, "sub") == DiffOp.zero()
    assert DiffOp({1: 0, 0: Poly.zero()}).is_zero()
    assert not E.is_zero()
    with pytest.raises(ValueError):
        op_combine(a, b, "mul")


def test_apply():
    sq = X * X
    assert E.apply(sq) == Poly([1, 2, 1])
    assert (E - 1)(sq) == sq.delta()
    assert DiffOp.shift(-1)(sq) == Poly([1, -2, 1])
    assert (Fraction(1, 2) * E)(X) == Poly([Fraction(1, 2), Fraction(1, 2)])


def test_apply_respects_composition():
    a = X * E - 2
    b = E * E + X * X
    p = Poly([1, -1, 3])
    assert (a * b)(p) == a(b(p))


def random_op(rng):
    orders = rng.sample([0, 1, 2], rng.randint(1, 3))
    return DiffOp(
        {k: Poly(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))) for k in orders}
    )


@pytest.mark.parametrize("seed", range(8))
def test_compose_associative(seed):
    rng = random.Random(seed)
    a, b, c = random_op(rng), random_op(rng), random_op(rng)
    assert (a * b) * c == a * (b * c)
    assert a.compose(b) == a * b


@pytest.mark.parametrize("seed", range(8))
def test_apply_compose_random(seed):
    rng = random.Random(50 + seed)
    a, b = random_op(rng), random_op(rng)
    p = Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 6)))
    assert (a * b)(p) == a(b(p))
    assert (a * b).apply(p) == a.apply(b.apply(p))
