from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import medium_lattices, small_lattices
from gabdim import (CycleInCovers, LatticeError, NotALattice, NotModular, build_lattice,
                    is_modular)
from gabdim.generators import chain, divisor, downset
from gabdim.lattice import cover_pairs

M3_COVERS = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]


def test_two_chain():
    L = build_lattice(2, [(0, 1)])
    assert (L.bottom, L.top) == (0, 1)
    assert L.covers == ((0, 1),)


def test_m3_axioms_exhaustive():
    L = build_lattice(5, M3_COVERS)
    assert (L.bottom, L.top) == (0, 4)
    for x in range(5):
        for y in range(5):
            assert L.join(x, y) == oracles.brute_join(L, x, y)
            assert L.meet(x, y) == oracles.brute_meet(L, x, y)


def test_two_maximal_elements_is_not_a_lattice():
    with pytest.raises(NotALattice) as info:
        build_lattice(3, [(0, 1), (0, 2)])
    assert info.value.witness == (1, 2)
    assert info.value.missing == "join"


def test_missing_meet_reported():
    with pytest.raises(NotALattice) as info:
        build_lattice(3, [(1, 0), (2, 0)])
    assert info.value.missing == "meet"


@pytest.mark.parametrize("covers", [[(0, 1), (1, 0)], [(0, 1), (1, 2), (2, 0)], [(1, 1)]])
def test_cycles_rejected(covers):
    with pytest.raises(CycleInCovers):
        build_lattice(3, covers)


def test_bad_arguments():
    with pytest.raises(LatticeError):
        build_lattice(0, [])
    with pytest.raises(LatticeError):
        build_lattice(2, [(0, 5)])
    with pytest.raises(LatticeError):
        build_lattice(2, [(0, 1)], names=["x", "x"])


def test_redundant_covers_are_reduced():
    L = build_lattice(3, [(0, 1), (1, 2), (0, 2)])
    assert L.covers == ((0, 1), (1, 2))


def test_m3_atoms(m3):
    a, b = m3.index("a"), m3.index("b")
    assert m3.meet(a, b) == m3.bottom
    assert m3.join(a, b) == m3.top


def test_four_chain_meet_join():
    L = chain(4)
    assert L.meet(1, 2) == 1
    assert L.join(1, 2) == 2


def test_divisor_lattice_matches_gcd_lcm():
    L = divisor(12)
    for x in L.elements:
        for y in L.elements:
            p, q = int(L.names[x]), int(L.names[y])
            assert int(L.names[L.meet(x, y)]) == gcd(p, q)
            assert int(L.names[L.join(x, y)]) == p * q // gcd(p, q)
    four, six = L.index("4"), L.index("6")
    assert L.names[L.meet(four, six)] == "2"
    assert L.names[L.join(four, six)] == "12"


def test_modularity_examples(m3, n5):
    assert is_modular(m3) == (True, None)
    ok, witness = is_modular(n5)
    assert not ok
    assert tuple(n5.names[w] for w in witness) == ("a", "b", "c")
    assert witness in oracles.modular_violations(n5)
    for n in range(1, 7):
        assert chain(n).modular


def test_require_modular(n5, m3):
    m3.require_modular()
    with pytest.raises(NotModular) as info:
        n5.require_modular()
    assert "witness" in str(info.value)


@pytest.mark.parametrize("L", small_lattices() + medium_lattices(), ids=lambda L: L.name)
def test_lattice_invariants(L):
    n = L.size
    table = L.order_table()
    for x in range(n):
        assert table[x][x]
        assert L.leq(L.bottom, x) and L.leq(x, L.top)
        for y in range(n):
            if x != y:
                assert not (table[x][y] and table[y][x])
            for z in range(n):
                if table[x][y] and table[y][z]:
                    assert table[x][z]
            j, m = L.join(x, y), L.meet(x, y)
            assert L.leq(x, j) and L.leq(y, j) and L.leq(m, x) and L.leq(m, y)
            # universal property against every element
            for z in range(n):
                if L.leq(x, z) and L.leq(y, z):
                    assert L.leq(j, z)
                if L.leq(z, x) and L.leq(z, y):
                    assert L.leq(z, m)
    # round-trip: covers re-closed give the same order
    again = build_lattice(n, L.covers, names=list(L.names))
    assert again.order_table() == table
    assert cover_pairs(again.up) == list(L.covers)
    # modularity agrees with the triple enumeration oracle
    assert L.modular == (not oracles.modular_violations(L))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10_000))
def test_lattice_laws_on_random_downset_lattices(size, seed):
    L = downset(size, seed)
    for x in L.elements:
        assert L.join(x, x) == x == L.meet(x, x)
        for y in L.elements:
            assert L.join(x, y) == L.join(y, x)
            assert L.meet(x, y) == L.meet(y, x)
            assert L.join(x, L.meet(x, y)) == x
            assert L.meet(x, L.join(x, y)) == x
            for z in L.elements:
                assert L.join(L.join(x, y), z) == L.join(x, L.join(y, z))
                assert L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z))
    assert L.modular


def test_rank(m3):
    assert [m3.rank(x) for x in m3.elements] == [0, 1, 1, 1, 2]
