"""
Gabriel dimension of intervals, computed two independent ways.

The *filtration* iterates the Gabriel operator from the trivial intervals:
``G(0) = O``, ``G(k+1) = gab(G(k))``. The *accumulative construction* grows
two chains side by side::

    S[k]   = {[a,b] : for all a < x <= b, [a,x] not in L(k) and [x,b] in L(k)}
    D(k+1) = D(k) | S[k]
    L(k+1) = L(k) | forall_exists(D(k+1))

with ``L(0) = D(0) = O``. The dimension of an interval is the first index
at which it appears. Both chains are indexed by natural numbers: a finite
lattice stabilizes after finitely many steps, so limit stages never arise on
their own. :func:`limit_stage` and :func:`construction_limit` evaluate the
limit formulas on an explicitly supplied prefix.
"""

from dataclasses import dataclass, field

from .classes import IntervalSet, NotBasic, dvs, forall_exists, gab
from .intervals import enumerate_intervals
from .lattice import bits


@dataclass
class Filtration:
    stages: list
    stabilization_index: int
    nonmodular_override: bool = False

    @property
    def final(self):
        return self.stages[-1]


def gab_filtration(lattice, seed=None, allow_nonmodular=False):
    """
    Iterate :func:`~gabdim.classes.gab` from ``dvs(seed)`` (default: the
    trivial intervals) until two consecutive stages coincide.

    The repeated stage is not stored, so ``stages[stabilization_index]`` is
    the last entry.
    """
    if not allow_nonmodular:
        lattice.require_modular()
    table = enumerate_intervals(lattice)
    if seed is None:
        seed = IntervalSet.trivial(table)
    elif not seed.flags.basic:
        raise NotBasic(f"filtration seed must be basic, got {seed!r}")
    stages = [dvs(seed)]
    while True:
        nxt = gab(stages[-1])
        if nxt == stages[-1]:
            break
        stages.append(nxt)
    return Filtration(stages, len(stages) - 1, allow_nonmodular and not lattice.modular)


def limit_stage(prefix):
    """Limit clause of the filtration: the division closure of the union of earlier stages."""
    union = prefix[0]
    for stage in prefix[1:]:
        union = union | stage
    return dvs(union)


def simple_layer(current):
    """
    Intervals whose every proper lower piece ``[a,x]`` (``a < x``) lies outside
    ``current`` while the matching upper piece ``[x,b]`` lies inside.

    Trivial intervals satisfy this vacuously.
    """
    table = current.table
    L = table.lattice
    rows = table.rows(current.mask)
    cols = [0] * L.size
    for x, row in enumerate(rows):
        for b in bits(row):
            cols[b] |= 1 << x
    mask = 0
    for i, (a, b) in enumerate(table.intervals):
        above_a = L.interval_mask(a, b) & ~(1 << a)
        if above_a & rows[a] == 0 and above_a & ~cols[b] == 0:
            mask |= 1 << i
    return IntervalSet(table, mask)


@dataclass
class ConstructionChains:
    """
    ``L[k]``, ``D[k]``, ``S[k]``, ``C[k] = L[k] | S[k]`` and the fresh layer
    ``fresh[k]`` (intervals entering ``L`` exactly at step ``k``) for
    ``k = 0 .. stabilization_index``.
    """

    L: list
    D: list
    S: list
    C: list
    fresh: list
    stabilization_index: int
    nonmodular_override: bool = False

    def successor(self, k):
        """``(D(k+1), L(k+1))`` computed from stage ``k``."""
        d_next = self.D[k] | self.S[k]
        return d_next, self.L[k] | forall_exists(d_next)


def l_construction(lattice, allow_nonmodular=False):
    """Run the accumulative construction until ``L`` stops growing."""
    if not allow_nonmodular:
        lattice.require_modular()
    table = enumerate_intervals(lattice)
    O = IntervalSet.trivial(table)
    Ls, Ds, Ss, Cs, fresh = [O], [O], [], [], [O]
    while True:
        k = len(Ls) - 1
        S = simple_layer(Ls[k])
        Ss.append(S)
        Cs.append(Ls[k] | S)
        d_next = Ds[k] | S
        l_next = Ls[k] | forall_exists(d_next)
        if l_next == Ls[k]:
            break
        Ds.append(d_next)
        Ls.append(l_next)
        fresh.append(forall_exists(d_next) - Ls[k])
    return ConstructionChains(Ls, Ds, Ss, Cs, fresh, len(Ls) - 1,
                              allow_nonmodular and not lattice.modular)


def fresh_layer_successor(chains, k):
    """
    ``L(k+1)`` assembled from the fresh layer: the intervals of
    ``forall_exists(D(k+1))`` not yet in ``L(k)``, added to ``L(k)``.
    """
    d_next, _ = chains.successor(k)
    layer = forall_exists(d_next) - chains.L[k]
    return chains.L[k] | layer


def construction_limit(L_prefix, D_prefix):
    """
    Limit stage of the accumulative construction on an explicit prefix.

    Returns ``(D, L_accumulative, L_layered)`` where ``L_accumulative`` is the
    union of the prefix plus ``forall_exists(D)`` and ``L_layered`` is the
    union of the prefix plus the limit layer ``forall_exists(D)`` taken as
    its own set of intervals. The two agree by construction; both are
    returned so callers can compare them.
    """
    table = L_prefix[0].table
    D = IntervalSet(table, 0)
    for d in D_prefix:
        D = D | d
    union = IntervalSet(table, 0)
    for l in L_prefix:
        union = union | l
    closure = forall_exists(D)
    limit_layer = IntervalSet(table, closure.mask)
    return D, union | closure, union | limit_layer


@dataclass
class DimensionTable:
    lattice: object
    method: str
    values: dict = field(default_factory=dict)

    def __getitem__(self, iv):
        return self.values[tuple(iv)]

    @property
    def lattice_dimension(self):
        L = self.lattice
        return self.values[(L.bottom, L.top)]

    def rows(self):
        return [(iv[0], iv[1], d) for iv, d in self.values.items()]


METHODS = ("filtration", "construction")


def _stages(lattice, method, allow_nonmodular):
    if method == "filtration":
        return gab_filtration(lattice, allow_nonmodular=allow_nonmodular).stages
    if method == "construction":
        return l_construction(lattice, allow_nonmodular=allow_nonmodular).L
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def dimension_table(lattice, method="filtration", allow_nonmodular=False):
    """Gabriel dimension of every interval (``None`` if it never enters a stage)."""
    stages = _stages(lattice, method, allow_nonmodular)
    table = enumerate_intervals(lattice)
    values = {}
    for i, iv in enumerate(table.intervals):
        values[tuple(iv)] = next(
            (k for k, stage in enumerate(stages) if (stage.mask >> i) & 1), None)
    return DimensionTable(lattice, method, values)


def gdim(lattice, interval, method="filtration", allow_nonmodular=False):
    table = enumerate_intervals(lattice)
    i = table.position(*interval)
    for k, stage in enumerate(_stages(lattice, method, allow_nonmodular)):
        if (stage.mask >> i) & 1:
            return k
    return None


def element_dimension(lattice, x, method="filtration"):
    """Dimension of the element ``x``, i.e. of ``[bottom, x]``."""
    return gdim(lattice, (lattice.bottom, x), method)


__all__ = [
    "ConstructionChains", "DimensionTable", "Filtration",
    "construction_limit", "dimension_table", "element_dimension", "fresh_layer_successor",
    "gab_filtration", "gdim", "l_construction", "limit_stage", "simple_layer",
]
