"""
Generators for the test corpus. Every kind produces a modular lattice.
"""

import random
from dataclasses import dataclass
from itertools import product

from .lattice import build_lattice, cover_pairs


class OutOfBounds(ValueError):
    pass


BOUNDS = {
    "chain": (1, 64),
    "boolean": (0, 5),
    "divisor": (1, 10000),
    "diamond": (0, 20),
    "subspace": (2, 5),
    "downset": (0, 7),
}
KINDS = tuple(BOUNDS)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: tuple
    seed: int = 0


def _from_order(names, leq, name):
    n = len(names)
    up = [sum(1 << y for y in range(n) if leq(x, y)) for x in range(n)]
    return build_lattice(n, cover_pairs(up), names=names, name=name)


def _check(kind, value):
    lo, hi = BOUNDS[kind]
    if not lo <= value <= hi:
        raise OutOfBounds(f"{kind} parameter {value} outside [{lo}, {hi}]")


def chain(n):
    _check("chain", n)
    return _from_order([str(i) for i in range(n)], lambda x, y: x <= y, f"chain{n}")


def _subset_name(prefix, members):
    return prefix + "".join(str(i) for i in members)


def boolean(n):
    _check("boolean", n)
    subsets = sorted(range(1 << n), key=lambda s: (s.bit_count(), s))
    names = [_subset_name("s", [i for i in range(n) if s >> i & 1]) for s in subsets]
    return _from_order(names, lambda x, y: subsets[x] & ~subsets[y] == 0, f"boolean{n}")


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def divisor(m):
    _check("divisor", m)
    ds = divisors(m)
    return _from_order([str(d) for d in ds], lambda x, y: ds[y] % ds[x] == 0, f"divisor{m}")


def diamond(k):
    """M_k: a bottom, ``k`` pairwise incomparable atoms ``a, b, ...``, and a top."""
    _check("diamond", k)
    names = ["0"] + [chr(ord("a") + i) for i in range(k)] + ["1"]
    last = k + 1

    def leq(x, y):
        return x == y or x == 0 or y == last

    return _from_order(names, leq, f"diamond{k}")


def _field(q):
    """Addition and multiplication tables of the field with ``q`` elements."""
    if q in (2, 3, 5):
        return ([[(x + y) % q for y in range(q)] for x in range(q)],
                [[(x * y) % q for y in range(q)] for x in range(q)])
    if q == 4:
        # GF(2)[t] / (t^2 + t + 1); element u + 2v encodes u + v t
        def mul(x, y):
            a0, a1, b0, b1 = x & 1, x >> 1, y & 1, y >> 1
            c0 = (a0 & b0) ^ (a1 & b1)
            c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
            return c0 | (c1 << 1)
        return ([[x ^ y for y in range(4)] for x in range(4)],
                [[mul(x, y) for y in range(4)] for x in range(4)])
    raise OutOfBounds(f"subspace field size {q} not in (2, 3, 4, 5)")


def subspace(q):
    """Subspaces of the plane over the ``q``-element field (this is M_{q+1})."""
    _check("subspace", q)
    add, mul = _field(q)
    vectors = list(product(range(q), repeat=2))
    zero = (0, 0)
    lines = []
    for v in vectors:
        if v == zero:
            continue
        span = frozenset((mul[c][v[0]], mul[c][v[1]]) for c in range(q))
        if span not in lines:
            lines.append(span)
    spaces = [frozenset([zero])] + lines + [frozenset(vectors)]

    def line_name(span):
        # first coordinate-normalized direction vector in the line
        x, y = min(v for v in span if v != zero)
        return f"l{x}_{y}"

    names = ["0"] + [line_name(s) for s in lines] + ["V"]
    # closure under addition is implied by the construction; assert it anyway
    for s in spaces:
        assert all((add[u[0]][v[0]], add[u[1]][v[1]]) in s for u in s for v in s)
    return _from_order(names, lambda x, y: spaces[x] <= spaces[y], f"subspace{q}")


def random_poset(size, seed):
    """
    Strict order on ``0..size-1``: each pair ``i < j`` becomes a relation with
    probability 1/2, then transitive closure. Returns the cover pairs.
    """
    rng = random.Random(seed)
    above = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.5:
                above[i] |= 1 << j
    for i in reversed(range(size)):
        for j in range(i + 1, size):
            if above[i] >> j & 1:
                above[i] |= above[j]
    up = [above[i] | (1 << i) for i in range(size)]
    return cover_pairs(up), up


def downset(size, seed=0):
    """Down-closed subsets of a seeded random poset, ordered by inclusion."""
    _check("downset", size)
    _, up = random_poset(size, seed)
    below = [0] * size
    for x in range(size):
        for y in range(size):
            if up[x] >> y & 1:
                below[y] |= 1 << x
    closed = [s for s in range(1 << size)
              if all(below[x] & ~s == 0 for x in range(size) if s >> x & 1)]
    closed.sort(key=lambda s: (s.bit_count(), s))
    names = [_subset_name("d", [i for i in range(size) if s >> i & 1]) for s in closed]
    return _from_order(names, lambda x, y: closed[x] & ~closed[y] == 0,
                       f"downset{size}_{seed}")


def generate(spec):
    kind, params = spec.kind, tuple(spec.params)
    if kind not in BOUNDS:
        raise OutOfBounds(f"unknown generator kind {kind!r}; expected one of {KINDS}")
    if kind == "downset":
        if len(params) not in (1, 2):
            raise OutOfBounds("downset takes a size and optionally a seed")
        seed = params[1] if len(params) == 2 else spec.seed
        return downset(params[0], seed)
    if len(params) != 1:
        raise OutOfBounds(f"{kind} takes exactly one parameter")
    return {"chain": chain, "boolean": boolean, "divisor": divisor,
            "diamond": diamond, "subspace": subspace}[kind](params[0])


def corpus(downset_seeds=50):
    """The standard corpus of modular lattices used by the acceptance checks."""
    lattices = [chain(n) for n in range(1, 9)]
    lattices += [boolean(n) for n in range(1, 5)]
    lattices += [divisor(m) for m in (12, 24, 36, 60, 360)]
    lattices += [diamond(k) for k in range(3, 7)]
    lattices += [subspace(q) for q in (2, 3, 4, 5)]
    lattices += [downset(3 + seed % 5, seed) for seed in range(downset_seeds)]
    return lattices
