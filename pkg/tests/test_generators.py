from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gabdim import GeneratorSpec, generate
from gabdim.generators import (OutOfBounds, boolean, chain, corpus, diamond, divisor, downset,
                               random_poset, subspace)


def test_chain():
    L = chain(3)
    assert L.size == 3 and len(L.covers) == 2


def test_divisor_twelve():
    L = divisor(12)
    assert sorted(int(n) for n in L.names) == [d for d in range(1, 13) if 12 % d == 0]
    for x in L.elements:
        for y in L.elements:
            p, q = int(L.names[x]), int(L.names[y])
            assert int(L.names[L.meet(x, y)]) == gcd(p, q)
            assert int(L.names[L.join(x, y)]) == p * q // gcd(p, q)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_subspace_is_diamond(q):
    L = subspace(q)
    # 1 zero space, q + 1 lines, the whole plane
    assert L.size == q + 3
    atoms = [x for x in L.elements if x not in (L.bottom, L.top)]
    assert len(atoms) == q + 1
    for x in atoms:
        for y in atoms:
            if x != y:
                assert L.meet(x, y) == L.bottom and L.join(x, y) == L.top
    ref = diamond(q + 1)
    assert sorted(len(c) for c in [L.covers]) == sorted(len(c) for c in [ref.covers])


def test_boolean_and_diamond_sizes():
    assert [boolean(n).size for n in range(6)] == [1, 2, 4, 8, 16, 32]
    assert diamond(3).names == ("0", "a", "b", "c", "1")
    assert diamond(0).size == 2


def test_downset_is_reproducible():
    assert downset(7, 42).covers == downset(7, 42).covers
    assert random_poset(7, 42) == random_poset(7, 42)
    assert len({downset(7, s).covers for s in range(10)}) > 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 2**32))
def test_downset_lattice_is_distributive(size, seed):
    L = downset(size, seed)
    for x in L.elements:
        for y in L.elements:
            for z in L.elements:
                assert L.meet(x, L.join(y, z)) == L.join(L.meet(x, y), L.meet(x, z))


@pytest.mark.parametrize("spec", [
    GeneratorSpec("chain", (0,)), GeneratorSpec("chain", (65,)), GeneratorSpec("boolean", (6,)),
    GeneratorSpec("divisor", (10001,)), GeneratorSpec("diamond", (21,)),
    GeneratorSpec("subspace", (6,)), GeneratorSpec("subspace", (1,)), GeneratorSpec("downset", (8,)),
    GeneratorSpec("nope", (1,)), GeneratorSpec("chain", (1, 2)), GeneratorSpec("downset", ()),
])
def test_out_of_bounds(spec):
    with pytest.raises(OutOfBounds):
        generate(spec)


def test_generate_dispatch():
    assert generate(GeneratorSpec("divisor", (60,))).size == 12
    assert generate(GeneratorSpec("downset", (5,), seed=3)).covers == downset(5, 3).covers
    assert generate(GeneratorSpec("downset", (5, 3))).covers == downset(5, 3).covers


def test_corpus_is_modular():
    lattices = corpus()
    assert len(lattices) == 8 + 4 + 5 + 4 + 4 + 50
    for L in lattices:
        assert L.modular
    for L in lattices[:25]:
        assert not oracles.modular_violations(L)
