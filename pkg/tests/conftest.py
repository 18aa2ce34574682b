import pytest

from stonefin.topo import FiniteSpace
from stonefin.valfield import FiniteField, RationalField


@pytest.fixture
def sierpinski():
    return FiniteSpace.sierpinski()


@pytest.fixture
def discrete3():
    return FiniteSpace.discrete(["1", "2", "3"])


@pytest.fixture
def q2():
    return RationalField(2)


@pytest.fixture
def f2():
    return FiniteField(2)
