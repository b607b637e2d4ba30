import pytest

from quiverserre.algebra import Quiver, Relation, build_algebra
from quiverserre.stratification import StratifiedAlgebra
from quiverserre.zoo import zoo_get, zoo_list

CORPUS = zoo_list()


@pytest.fixture(params=CORPUS)
def entry(request):
    return zoo_get(request.param)


@pytest.fixture
def sl2():
    return zoo_get("sl2-block").algebra


@pytest.fixture
def sl2_strat():
    e = zoo_get("sl2-block")
    return StratifiedAlgebra(e.algebra, e.order)


def strat_of(name):
    e = zoo_get(name)
    return StratifiedAlgebra(e.algebra, e.order)


def semisimple(n=2):
    return build_algebra(Quiver([str(i + 1) for i in range(n)], []))


def loop_algebra(k):
    """k[x]/(x^k)."""
    return build_algebra(Quiver(["1"], [("x", "1", "1")]), [Relation.of(["x"] * k)])
