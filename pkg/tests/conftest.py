from fractions import Fraction

import pytest

from darboux_ladder.families import make_family

# Parameter choices swept by the identity tests.
FAMILY_CASES = [
    ("charlier", {"mu": Fraction(1, 3)}),
    ("charlier", {"mu": 1}),
    ("charlier", {"mu": Fraction(5, 2)}),
    ("meixner", {"gamma": Fraction(1, 2), "mu": Fraction(1, 3)}),
    ("kravchuk", {"p": Fraction(1, 2), "N": 8}),
    ("hahn", {"alpha": 0, "beta": 0, "N": 3}),
    ("hahn", {"alpha": Fraction(1, 2), "beta": Fraction(3, 2), "N": 8}),
]


def case_id(case):
    kind, params = case
    return kind + "(" + ",".join(f"{k}={v}" for k, v in params.items()) + ")"


@pytest.fixture(params=FAMILY_CASES, ids=case_id)
def family(request):
    kind, params = request.param
    return make_family(kind, params)


@pytest.fixture
def charlier1():
    return make_family("charlier", {"mu": 1})


@pytest.fixture
def hahn003():
    return make_family("hahn", {"alpha": 0, "beta": 0, "N": 3})


@pytest.fixture
def meixner():
    return make_family("meixner", {"gamma": Fraction(1, 2), "mu": Fraction(1, 3)})


@pytest.fixture
def kravchuk():
    return make_family("kravchuk", {"p": Fraction(1, 2), "N": 8})
