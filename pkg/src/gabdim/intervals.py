"""
Intervals of a finite lattice: enumeration, containment and similarity.

Two intervals are similar when they are the transposes ``[l, l v r]`` and
``[l ^ r, r]`` of some pair of elements. In a modular lattice the map
``x -> x ^ r`` is then an isomorphism between them.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .lattice import NotModular, bits


class Interval(NamedTuple):
    lower: int
    upper: int

    @property
    def trivial(self):
        return self.lower == self.upper


class IntervalTable:
    """
    All intervals of a lattice in lexicographic ``(lower, upper)`` order.

    Interval sets downstream are bitmasks over the positions of this table.
    Derived lookup structures (subintervals, similarity classes) are built
    on first use.
    """

    def __init__(self, lattice):
        self.lattice = lattice
        intervals = [Interval(a, b) for a in lattice.elements for b in bits(lattice.up[a])]
        self.intervals = tuple(intervals)
        self.index = {iv: i for i, iv in enumerate(intervals)}
        self.trivial_mask = sum(1 << i for i, iv in enumerate(intervals) if iv.trivial)
        self.full_mask = (1 << len(intervals)) - 1
        self._sub_masks = None
        self._sim_class = None
        self._class_masks = None

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def position(self, lower, upper):
        try:
            return self.index[(lower, upper)]
        except KeyError:
            raise KeyError(f"[{lower}, {upper}] is not an interval") from None

    def label(self, iv):
        names = self.lattice.names
        return f"[{names[iv.lower]},{names[iv.upper]}]"

    @property
    def sub_masks(self):
        """``sub_masks[i]`` is the bitmask of all subintervals of interval ``i``."""
        if self._sub_masks is None:
            L = self.lattice
            masks = []
            for a, b in self.intervals:
                m = 0
                for c in bits(L.interval_mask(a, b)):
                    for d in bits(L.up[c] & L.down[b]):
                        m |= 1 << self.index[(c, d)]
                masks.append(m)
            self._sub_masks = tuple(masks)
        return self._sub_masks

    def _build_similarity(self):
        L = self.lattice
        parent = list(range(len(self.intervals)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for l in L.elements:
            for r in L.elements:
                i = self.index[(l, L.join(l, r))]
                j = self.index[(L.meet(l, r), r)]
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

        roots = [find(i) for i in range(len(self.intervals))]
        class_ids = {root: k for k, root in enumerate(sorted(set(roots)))}
        self._sim_class = tuple(class_ids[root] for root in roots)
        masks = [0] * len(class_ids)
        for i, k in enumerate(self._sim_class):
            masks[k] |= 1 << i
        self._class_masks = tuple(masks)

    @property
    def similarity_class(self):
        """Connected component of each interval under one-step similarity."""
        if self._sim_class is None:
            self._build_similarity()
        return self._sim_class

    @property
    def class_masks(self):
        if self._class_masks is None:
            self._build_similarity()
        return self._class_masks

    def rows(self, mask):
        """Split a set of intervals into per-lower-endpoint element bitmasks."""
        rows = [0] * self.lattice.size
        ivs = self.intervals
        for i in bits(mask):
            a, b = ivs[i]
            rows[a] |= 1 << b
        return rows

    def from_rows(self, rows):
        index = self.index
        mask = 0
        for a, row in enumerate(rows):
            for b in bits(row):
                mask |= 1 << index[(a, b)]
        return mask


def enumerate_intervals(lattice):
    """The (cached) :class:`IntervalTable` of ``lattice``."""
    table = lattice._cache.get("intervals")
    if table is None:
        table = lattice._cache["intervals"] = IntervalTable(lattice)
    return table


def is_subinterval(lattice, inner, outer):
    """``inner -> outer``: both endpoints of ``inner`` lie inside ``outer``."""
    return lattice.leq(outer.lower, inner.lower) and lattice.leq(inner.upper, outer.upper)


def transposes(lattice, l, r):
    """The pair ``([l, l v r], [l ^ r, r])``."""
    return Interval(l, lattice.join(l, r)), Interval(lattice.meet(l, r), r)


def similarity_witness(lattice, first, second):
    """
    Search every element pair ``(l, r)`` for one whose transposes are
    ``{first, second}``. Returns the first such pair found, or None.
    """
    first, second = Interval(*first), Interval(*second)
    for l in lattice.elements:
        for r in lattice.elements:
            top_side, bottom_side = transposes(lattice, l, r)
            if (top_side, bottom_side) in ((first, second), (second, first)):
                return (l, r)
    return None


def similar(lattice, first, second):
    return similarity_witness(lattice, first, second) is not None


@dataclass(frozen=True)
class Perspectivity:
    """The pairing ``x -> x ^ r`` of ``[l, l v r]`` onto ``[l ^ r, r]``."""

    l: int
    r: int
    source: Interval
    target: Interval
    forward: dict
    inverse: dict
    is_isomorphism: bool


def _order_preserving_bijection(lattice, forward, inverse):
    for x, y in forward.items():
        if inverse.get(y) != x:
            return False
    for y, x in inverse.items():
        if forward.get(x) != y:
            return False
    for x1 in forward:
        for x2 in forward:
            if lattice.leq(x1, x2) != lattice.leq(forward[x1], forward[x2]):
                return False
    return True


def perspectivity_map(lattice, l, r, require_modular=True):
    """
    Compute ``x -> x ^ r`` on ``[l, l v r]`` and ``y -> y v l`` on
    ``[l ^ r, r]`` and check that they are mutually inverse order
    isomorphisms. Raises :class:`NotModular` on a non-modular lattice unless
    ``require_modular`` is false, in which case the check result is only
    reported.
    """
    if require_modular:
        lattice.require_modular()
    source, target = transposes(lattice, l, r)
    forward = {x: lattice.meet(x, r) for x in bits(lattice.interval_mask(*source))}
    inverse = {y: lattice.join(y, l) for y in bits(lattice.interval_mask(*target))}
    ok = _order_preserving_bijection(lattice, forward, inverse)
    if require_modular and not ok:
        raise AssertionError(f"perspectivity for ({l}, {r}) failed in a modular lattice")
    return Perspectivity(l, r, source, target, forward, inverse, ok)


__all__ = [
    "Interval", "IntervalTable", "NotModular", "Perspectivity", "enumerate_intervals",
    "is_subinterval", "perspectivity_map", "similar", "similarity_witness", "transposes",
]
