"""
Machine check of the identities relating the Gabriel filtration and the
accumulative construction, stage by stage, on one lattice.

Every check is an exact set comparison. A failed check carries the first
interval (in table order) that witnesses the failure.
"""

from dataclasses import dataclass, field
from itertools import product

from .classes import (DEFAULT_THRESHOLD, IntervalSet, crt, dvs, enumerate_basic_sets,
                      forall_exists, gab, smp)
from .dimension import (construction_limit, dimension_table, fresh_layer_successor,
                        gab_filtration, l_construction, limit_stage)
from .intervals import enumerate_intervals

FINITE_COLLAPSE_NOTE = (
    "finite collapse: every cover interval is critical over the trivial intervals, "
    "and chaining covers along maximal chains reaches every interval, so on a finite "
    "modular lattice one application of the Gabriel operator already yields all "
    "intervals; every nontrivial interval has dimension 1 and the stabilization index "
    "is 1 (0 for the one-element lattice). Transfinite dimensions cannot occur here."
)
LIMIT_NOTE = (
    "indices are natural numbers; limit-stage formulas are evaluated only on "
    "explicit unions of prefix stages"
)
CONSTRUCTION_NOTE = (
    "the recursive definition of dimension through simple intervals is evaluated as the "
    "staged accumulative construction, which fixes the lower dimensions before each stage "
    "refers to them; the filtration and that construction are the two methods compared"
)


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: object = None  # Interval or None


@dataclass
class VerificationReport:
    lattice: object
    filtration: object
    chains: object
    checks: list
    dimensions: object
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def _equal(name, left, right):
    diff = left ^ right
    return Check(name, not diff, diff.first())


def _subset(name, small, big):
    extra = small - big
    return Check(name, not extra, extra.first())


def _holds(name, ok, witness=None):
    return Check(name, bool(ok), None if ok else witness)


def operator_law_checks(sets, label):
    """
    Laws relating the operators on a family of basic sets: ``forall_exists``
    equals ``dvs``, critical intervals lie inside simple ones, the two
    factorizations of ``gab`` agree, and ``dvs`` is inflationary, monotone,
    meet-preserving and idempotent. One aggregated check per law.
    """
    results = {}

    def record(law, check):
        if law not in results or (results[law].passed and not check.passed):
            results[law] = Check(f"{law}[{label}]", check.passed, check.counterexample)

    for B in sets:
        closed = dvs(B)
        record("forall_exists_equals_dvs", _equal("", forall_exists(B), closed))
        crit, simp = crt(B), smp(B)
        record("critical_inside_simple", _subset("", crit, simp))
        record("gab_factorizations_agree", _equal("", dvs(crit), dvs(simp)))
        record("dvs_inflationary", _subset("", B, closed))
        record("dvs_idempotent", _equal("", dvs(closed), closed))
    for B, B2 in product(sets, repeat=2):
        if B <= B2:
            record("dvs_monotone", _subset("", dvs(B), dvs(B2)))
        meet = B & B2
        if meet:
            record("dvs_preserves_meets", _equal("", dvs(meet), dvs(B) & dvs(B2)))
    return [results[k] for k in sorted(results)]


def verify_theorems(lattice, threshold=DEFAULT_THRESHOLD):
    """
    Run the full check suite on a modular lattice.

    Raises :class:`~gabdim.lattice.NotModular` otherwise: the identities are
    only claimed for modular lattices.
    """
    lattice.require_modular()
    table = enumerate_intervals(lattice)
    full = IntervalSet.full(table)
    filt = gab_filtration(lattice)
    chains = l_construction(lattice)
    F, Ls, Ds = filt.stages, chains.L, chains.D
    top = chains.stabilization_index
    checks = [_holds("stabilization_indices_agree",
                     filt.stabilization_index == chains.stabilization_index)]

    for k in range(max(len(F), len(Ls))):
        tag = f"[{k}]"
        f_k = F[min(k, len(F) - 1)]
        l_k = Ls[min(k, top)]
        l_next = Ls[min(k + 1, top)]
        checks += [
            _equal("construction_equals_filtration" + tag, l_k, f_k),
            _equal("gab_of_stage_is_next_stage" + tag, gab(l_k), l_next),
            _equal("critical_intervals_of_stage" + tag, chains.C[min(k, top)], crt(l_k)),
            _subset("d_chain_inside_l_chain" + tag, Ds[min(k, top)], l_k),
            _equal("successor_formulas_agree" + tag,
                   fresh_layer_successor(chains, min(k, top)), chains.successor(min(k, top))[1]),
            _holds("construction_stage_is_division" + tag, l_k.flags.division, l_k.first()),
            _holds("filtration_stage_is_division" + tag, f_k.flags.division, f_k.first()),
            _subset("simple_layer_holds_trivials" + tag,
                    IntervalSet.trivial(table), chains.S[min(k, top)]),
        ]
        if k > 0:
            checks.append(_subset("l_chain_ascends" + tag, Ls[min(k - 1, top)], l_k))
            checks.append(_subset("d_chain_ascends" + tag, Ds[min(k - 1, top)], Ds[min(k, top)]))

    for p in range(1, top + 2):
        tag = f"[prefix {p}]"
        d_lim, l_acc, l_layer = construction_limit(Ls[:p], Ds[:p])
        checks += [
            _equal("limit_formulas_agree" + tag, l_acc, l_layer),
            _equal("limit_construction_equals_limit_filtration" + tag, l_acc, limit_stage(F[:p])),
        ]

    stage_sets = [s for s in Ls + chains.C + [smp(l) for l in Ls] if s.flags.basic]
    checks += operator_law_checks(list(dict.fromkeys(stage_sets)), "stages")
    if len(table) <= threshold:
        checks += operator_law_checks(enumerate_basic_sets(lattice, threshold), "all basic sets")

    by_filtration = dimension_table(lattice, "filtration")
    by_construction = dimension_table(lattice, "construction")
    mismatch = next((iv for iv in table if by_filtration[iv] != by_construction[iv]), None)
    checks.append(_holds("dimension_methods_agree", mismatch is None, mismatch))
    zero_bad = next((iv for iv in table if (by_filtration[iv] == 0) != iv.trivial), None)
    checks.append(_holds("dimension_zero_iff_trivial", zero_bad is None, zero_bad))

    expected_index = 0 if lattice.size == 1 else 1
    missing = full - filt.final
    checks.append(_holds("finite_collapse",
                         filt.stabilization_index == expected_index and not missing,
                         missing.first()))
    return VerificationReport(lattice, filt, chains, checks, by_filtration,
                              [FINITE_COLLAPSE_NOTE, LIMIT_NOTE, CONSTRUCTION_NOTE])
