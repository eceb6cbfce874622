"""
Sets of intervals, their class hierarchy, and the closure operators on them.

A set is *abstract* when it is nonempty and closed under similarity,
*basic* when also closed under subintervals, a *congruence* set when basic
and closed under abutting (``[a,b], [b,c] => [a,c]``), *pre-division* when
basic and each family ``{x : [a,x] in S}`` is closed under joins, and a
*division* set when it is both congruence and pre-division.

On a finite lattice closure under arbitrary joins is the same as closure
under binary joins, so only the binary form is used.
"""

import random
from dataclasses import dataclass
from functools import reduce

from .intervals import Interval, enumerate_intervals
from .lattice import bits


class NotBasic(ValueError):
    pass


class TooLarge(ValueError):
    pass


DEFAULT_THRESHOLD = 14


class IntervalSet:
    """
    Immutable set of intervals of one lattice, stored as a bitmask over the
    positions of its :class:`~gabdim.intervals.IntervalTable`.
    """

    __slots__ = ("table", "mask", "_flags")

    def __init__(self, table, mask=0):
        self.table = table
        self.mask = mask
        self._flags = None

    @classmethod
    def of(cls, table, intervals):
        index = table.index
        mask = 0
        for iv in intervals:
            mask |= 1 << index[tuple(iv)]
        return cls(table, mask)

    @classmethod
    def trivial(cls, table):
        return cls(table, table.trivial_mask)

    @classmethod
    def full(cls, table):
        return cls(table, table.full_mask)

    @property
    def lattice(self):
        return self.table.lattice

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __iter__(self):
        ivs = self.table.intervals
        return (ivs[i] for i in bits(self.mask))

    def __contains__(self, iv):
        i = self.table.index.get(tuple(iv))
        return i is not None and (self.mask >> i) & 1 == 1

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.table is other.table and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.table), self.mask))

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __ge__(self, other):
        return other <= self

    def __or__(self, other):
        return IntervalSet(self.table, self.mask | other.mask)

    def __and__(self, other):
        return IntervalSet(self.table, self.mask & other.mask)

    def __sub__(self, other):
        return IntervalSet(self.table, self.mask & ~other.mask)

    def __xor__(self, other):
        return IntervalSet(self.table, self.mask ^ other.mask)

    def __repr__(self):
        labels = ", ".join(self.table.label(iv) for iv in self)
        return f"IntervalSet({{{labels}}})"

    def sorted(self):
        return list(self)

    def first(self):
        """Lowest-indexed member, or None for the empty set."""
        if not self.mask:
            return None
        return self.table.intervals[(self.mask & -self.mask).bit_length() - 1]

    @property
    def flags(self):
        if self._flags is None:
            self._flags = classify(self)
        return self._flags


@dataclass(frozen=True)
class ClassFlags:
    abstract: bool
    basic: bool
    congruence: bool
    pre_division: bool
    division: bool

    def names(self):
        return [k for k in ("abstract", "basic", "congruence", "pre_division", "division")
                if getattr(self, k)]


def _closed_under_similarity(table, mask):
    return all(mask & cm in (0, cm) for cm in table.class_masks)


def _closed_under_subintervals(table, mask):
    subs = table.sub_masks
    return all(subs[i] & ~mask == 0 for i in bits(mask))


def _closed_under_abutting(table, mask):
    rows = table.rows(mask)
    return all(rows[b] & ~rows[a] == 0 for a in range(len(rows)) for b in bits(rows[a]))


def _closed_under_joins(table, mask):
    join = table.lattice.join
    for row in table.rows(mask):
        members = list(bits(row))
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if not (row >> join(x, y)) & 1:
                    return False
    return True


def classify(S):
    """Evaluate every class predicate on ``S``."""
    table, mask = S.table, S.mask
    abstract = mask != 0 and _closed_under_similarity(table, mask)
    basic = abstract and _closed_under_subintervals(table, mask)
    congruence = basic and _closed_under_abutting(table, mask)
    pre_division = basic and _closed_under_joins(table, mask)
    return ClassFlags(abstract, basic, congruence, pre_division, congruence and pre_division)


def is_basic(S):
    return S.flags.basic


def is_division(S):
    return S.flags.division


# Closure rules. Each maps a mask to a superset; a set is closed under the
# rule iff the rule returns it unchanged.

def similarity_step(table, mask):
    cls, cms = table.similarity_class, table.class_masks
    out = mask
    for i in bits(mask):
        out |= cms[cls[i]]
    return out


def subinterval_step(table, mask):
    subs = table.sub_masks
    out = mask
    for i in bits(mask):
        out |= subs[i]
    return out


def abutting_step(table, mask):
    rows = table.rows(mask)
    # upper elements first, so rows[b] is already transitively closed
    for a in reversed(table.lattice.topological_order):
        row = rows[a]
        extra = row
        for b in bits(row & ~(1 << a)):
            extra |= rows[b]
        rows[a] = extra
    return mask | table.from_rows(rows)


def join_step(table, mask):
    join = table.lattice.join
    rows = table.rows(mask)
    for a, row in enumerate(rows):
        pending = list(bits(row))
        while pending:
            x = pending.pop()
            for y in bits(row):
                z = join(x, y)
                if not (row >> z) & 1:
                    row |= 1 << z
                    pending.append(z)
        rows[a] = row
    return mask | table.from_rows(rows)


RULES = {
    "similarity": similarity_step,
    "subinterval": subinterval_step,
    "abutting": abutting_step,
    "join": join_step,
}
BASIC_RULES = ("similarity", "subinterval")
DIVISION_RULES = ("similarity", "subinterval", "abutting", "join")


def close(S, rules=DIVISION_RULES):
    """Least superset of ``S`` fixed by every rule, applied round-robin in the given order."""
    table = S.table
    steps = [RULES[r] for r in rules]
    mask = S.mask
    while True:
        new = mask
        for step in steps:
            new = step(table, new)
        if new == mask:
            return IntervalSet(table, mask)
        mask = new


def _require_nonempty(S):
    if not S:
        raise ValueError("closure of the empty set of intervals is undefined")


def basic_closure(S):
    """Least basic set containing the nonempty set ``S``."""
    _require_nonempty(S)
    return close(S, BASIC_RULES)


def dvs(S, rules=DIVISION_RULES):
    """
    Least division set containing the nonempty set ``S``.

    ``rules`` fixes the order in which the closure rules are applied each
    round; any order reaches the same fixpoint.
    """
    _require_nonempty(S)
    table = S.table
    cache = table.lattice._cache.setdefault("dvs", {})
    key = (S.mask, tuple(rules))
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = close(S, rules).mask
    return IntervalSet(table, hit)


def forall_exists(C):
    """
    Intervals ``[a,b]`` such that every ``a <= x < b`` has some
    ``x < y <= b`` with ``[x,y]`` in ``C``.
    """
    table = C.table
    L = table.lattice
    n = L.size
    rows = table.rows(C.mask)
    # reach[x]: elements b lying above some y > x with [x,y] in C
    reach = [0] * n
    for x in range(n):
        for y in bits(rows[x] & ~(1 << x)):
            reach[x] |= L.up[y]
    # good[b]: the x with b in reach[x]
    good = [0] * n
    for x in range(n):
        for b in bits(reach[x]):
            good[b] |= 1 << x
    mask = 0
    for i, (a, b) in enumerate(table.intervals):
        needed = L.interval_mask(a, b) & ~(1 << b)
        if needed & ~good[b] == 0:
            mask |= 1 << i
    return IntervalSet(table, mask)


def _require_basic(B):
    if not B.flags.basic:
        raise NotBasic(f"operator requires a basic set of intervals, got {B!r}")


def _columns(table, rows):
    cols = [0] * len(rows)
    for x, row in enumerate(rows):
        for b in bits(row):
            cols[b] |= 1 << x
    return cols


def smp(B):
    """``B``-simple intervals: every ``a <= x <= b`` has ``[a,x]`` or ``[x,b]`` in ``B``."""
    _require_basic(B)
    table = B.table
    L = table.lattice
    rows = table.rows(B.mask)
    cols = _columns(table, rows)
    mask = 0
    for i, (a, b) in enumerate(table.intervals):
        if L.interval_mask(a, b) & ~(rows[a] | cols[b]) == 0:
            mask |= 1 << i
    return IntervalSet(table, mask)


def crt(B):
    """``B``-critical intervals: every ``a < x <= b`` has ``[x,b]`` in ``B``."""
    _require_basic(B)
    table = B.table
    L = table.lattice
    cols = _columns(table, table.rows(B.mask))
    mask = 0
    for i, (a, b) in enumerate(table.intervals):
        if L.interval_mask(a, b) & ~(1 << a) & ~cols[b] == 0:
            mask |= 1 << i
    return IntervalSet(table, mask)


def gab(B):
    """The Gabriel operator: least division set containing the ``B``-critical intervals."""
    return dvs(crt(B))


def trivial_set(lattice):
    return IntervalSet.trivial(enumerate_intervals(lattice))


def full_set(lattice):
    return IntervalSet.full(enumerate_intervals(lattice))


def interval_set(lattice, intervals):
    return IntervalSet.of(enumerate_intervals(lattice), [Interval(*iv) for iv in intervals])


def enumerate_sets(table, predicate, threshold=DEFAULT_THRESHOLD):
    """All subsets of the interval table satisfying ``predicate``, by powerset filtering."""
    if len(table) > threshold:
        raise TooLarge(f"{len(table)} intervals exceeds the exhaustion threshold {threshold}")
    return [S for S in (IntervalSet(table, m) for m in range(1 << len(table))) if predicate(S)]


def enumerate_basic_sets(lattice, threshold=DEFAULT_THRESHOLD):
    return enumerate_sets(enumerate_intervals(lattice), is_basic, threshold)


def enumerate_division_sets(lattice, threshold=DEFAULT_THRESHOLD):
    return enumerate_sets(enumerate_intervals(lattice), is_division, threshold)


def random_basic_set(table, rng=None, max_generators=3):
    """Basic closure of a few randomly chosen intervals."""
    rng = rng or random.Random()
    k = rng.randint(1, max_generators)
    picks = [rng.randrange(len(table)) for _ in range(k)]
    mask = reduce(lambda m, i: m | (1 << i), picks, 0)
    return basic_closure(IntervalSet(table, mask))
