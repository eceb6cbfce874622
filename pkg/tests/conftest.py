import pytest

from gabdim import build_lattice, fixture
from gabdim.generators import boolean, chain, diamond, divisor


@pytest.fixture
def m3():
    return fixture("m3")


@pytest.fixture
def n5():
    return fixture("n5")


@pytest.fixture
def two_chain():
    return chain(2)


@pytest.fixture
def three_chain():
    return fixture("three_chain")


@pytest.fixture
def one_point():
    return chain(1)


def small_lattices():
    """Lattices small enough for powerset oracles (at most 14 intervals)."""
    return [chain(1), chain(2), chain(3), chain(4), boolean(2), diamond(3), fixture("m3")]


def medium_lattices():
    return [chain(5), boolean(3), diamond(4), divisor(12), divisor(30), fixture("n5"),
            fixture("nonmodular_random"), build_lattice(
                6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)], name="square_tail")]
