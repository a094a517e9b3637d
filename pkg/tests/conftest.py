from fractions import Fraction

import pytest
from hypothesis import settings

from isolab.maps import LinearMap
from isolab.space import WeightedSpace

settings.register_profile("lab", max_examples=60, deadline=None)
settings.load_profile("lab")

HALF = Fraction(1, 2)


@pytest.fixture
def abc():
    return WeightedSpace(("a", "b", "c"), (1, 1, 1))


@pytest.fixture
def A_sign(abc):
    """span{(1,1,1), (1,-1,0)}: M(A) = {a, b}."""
    return abc.sub((1, 1, 1), (1, -1, 0))


@pytest.fixture
def A_half(abc):
    """span{(1,1,1), (0,1/2,1)}: M(A) = {a, c}."""
    return abc.sub((1, 1, 1), (0, HALF, 1))


@pytest.fixture
def ab():
    return WeightedSpace(("a", "b"), (1, 1))


@pytest.fixture
def xyz():
    return WeightedSpace(("x", "y", "z"), (1, 1, 1))


@pytest.fixture
def T_avg(ab, xyz):
    """Tf = (f(a), -f(b), (f(a) + f(b)) / 2)."""
    return LinearMap.from_values(ab.full(), xyz.full(), [[1, 0], [0, -1], [HALF, HALF]])


@pytest.fixture
def swap(ab):
    """Tf = (f(b), -f(a))."""
    A = ab.full()
    return LinearMap.from_values(A, A, [[0, 1], [-1, 0]])
