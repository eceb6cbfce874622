"""
Finite bounded lattices built from a cover (Hasse) relation.

Elements are the integers ``0 .. n-1``. The order is stored as one bitmask
per element (``up[x]`` has bit ``y`` set iff ``x <= y``), and meets/joins are
precomputed into ``n x n`` tables at build time.
"""

from graphlib import CycleError, TopologicalSorter


class LatticeError(ValueError):
    """Base class for errors raised while building or using a lattice."""


class CycleInCovers(LatticeError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation contains a cycle through {list(self.cycle)}")


class NotALattice(LatticeError):
    def __init__(self, x, y, missing, names=None):
        self.witness = (x, y)
        self.missing = missing  # "join" or "meet"
        label = (names[x], names[y]) if names else (x, y)
        super().__init__(f"elements {label[0]!s} and {label[1]!s} have no {missing}")


class NoBoundedStructure(LatticeError):
    pass


class NotModular(LatticeError):
    def __init__(self, witness=None, names=None):
        self.witness = witness
        if witness is None:
            msg = "lattice is not modular"
        else:
            a, b, c = (names[w] for w in witness) if names else witness
            msg = f"lattice is not modular (witness a={a}, b={b}, c={c})"
        super().__init__(msg)


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """
    An immutable finite bounded lattice.

    Build instances with :func:`build_lattice`; the constructor trusts its
    arguments.
    """

    __slots__ = ("name", "names", "up", "down", "covers", "bottom", "top",
                 "_meet", "_join", "_topo", "_modular", "_cache")

    def __init__(self, name, names, up, down, covers, bottom, top, meet, join, topo):
        self.name = name
        self.names = tuple(names)
        self.up = tuple(up)
        self.down = tuple(down)
        self.covers = tuple(covers)
        self.bottom = bottom
        self.top = top
        self._meet = meet
        self._join = join
        self._topo = tuple(topo)
        self._modular = None
        self._cache = {}

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"Lattice({self.name!r}, size={len(self)}, covers={len(self.covers)})"

    @property
    def size(self):
        return len(self.names)

    @property
    def elements(self):
        return range(len(self.names))

    @property
    def all_mask(self):
        return (1 << len(self.names)) - 1

    @property
    def topological_order(self):
        """Elements listed so that ``x < y`` implies ``x`` comes first."""
        return self._topo

    def leq(self, x, y):
        return (self.up[x] >> y) & 1 == 1

    def meet(self, x, y):
        return self._meet[x][y]

    def join(self, x, y):
        return self._join[x][y]

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def order_table(self):
        n = len(self.names)
        return tuple(tuple(self.leq(x, y) for y in range(n)) for x in range(n))

    def interval_mask(self, a, b):
        """Bitmask of the elements of ``[a, b]``."""
        return self.up[a] & self.down[b]

    def rank(self, x):
        """Length of the longest chain from the bottom up to ``x``."""
        ranks = self._cache.get("rank")
        if ranks is None:
            ranks = [0] * len(self.names)
            for y in self._topo:
                for lo, hi in self.covers:
                    if hi == y:
                        ranks[y] = max(ranks[y], ranks[lo] + 1)
            self._cache["rank"] = ranks
        return ranks[x]

    @property
    def modular(self):
        if self._modular is None:
            self._modular = find_modularity_violation(self)
        return self._modular is False

    @property
    def modularity_witness(self):
        self.modular
        return None if self._modular is False else self._modular

    def require_modular(self):
        if not self.modular:
            raise NotModular(self.modularity_witness, self.names)


def _order_masks(n, covers):
    graph = {x: set() for x in range(n)}
    for lo, hi in covers:
        graph[hi].add(lo)
    try:
        topo = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise CycleInCovers(exc.args[1]) from None

    succ = [[] for _ in range(n)]
    for lo, hi in covers:
        succ[lo].append(hi)
    up = [0] * n
    for x in reversed(topo):
        m = 1 << x
        for y in succ[x]:
            m |= up[y]
        up[x] = m
    down = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            down[y] |= 1 << x
    return topo, up, down


def _extremum(candidates, masks):
    # the extremum is the candidate whose mask equals the candidate set
    for z in bits(candidates):
        if masks[z] == candidates:
            return z
    return None


def cover_pairs(up):
    """Transitive reduction of the order given by ``up`` masks."""
    n = len(up)
    pairs = []
    for x in range(n):
        strict = up[x] & ~(1 << x)
        for y in bits(strict):
            between = strict & ~(1 << y)
            if not any((up[z] >> y) & 1 for z in bits(between)):
                pairs.append((x, y))
    return pairs


def build_lattice(n, covers, names=None, name="L"):
    """
    Build a lattice on elements ``0..n-1`` from cover pairs ``(lower, upper)``.

    The covers may contain redundant (transitive) pairs; the stored
    ``covers`` attribute is the true cover relation recomputed from the
    order. Raises :class:`CycleInCovers`, :class:`NotALattice` or
    :class:`NoBoundedStructure`.
    """
    if n < 1:
        raise LatticeError("a lattice needs at least one element")
    covers = [tuple(p) for p in covers]
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise LatticeError(f"cover pair {(lo, hi)} references an element outside 0..{n - 1}")
        if lo == hi:
            raise CycleInCovers([lo, lo])
    if names is None:
        names = [str(x) for x in range(n)]
    elif len(names) != n or len(set(names)) != n:
        raise LatticeError("names must be distinct and one per element")

    topo, up, down = _order_masks(n, covers)

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            j = _extremum(up[x] & up[y], up)
            if j is None:
                raise NotALattice(x, y, "join", names)
            m = _extremum(down[x] & down[y], down)
            if m is None:
                raise NotALattice(x, y, "meet", names)
            join[x][y] = join[y][x] = j
            meet[x][y] = meet[y][x] = m

    full = (1 << n) - 1
    bottoms = [x for x in range(n) if up[x] == full]
    tops = [x for x in range(n) if down[x] == full]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NoBoundedStructure(f"expected one bottom and one top, found {bottoms} and {tops}")

    return Lattice(name, names, up, down, cover_pairs(up), bottoms[0], tops[0],
                   meet, join, topo)


def find_modularity_violation(lattice):
    """
    Return a triple ``(a, b, c)`` with ``a <= c`` and
    ``a v (b ^ c) != (a v b) ^ c``, or ``False`` when the lattice is modular.
    """
    meet, join = lattice._meet, lattice._join
    for a in lattice.elements:
        for c in bits(lattice.up[a]):
            if c == a:
                continue
            for b in lattice.elements:
                if join[a][meet[b][c]] != meet[join[a][b]][c]:
                    return (a, b, c)
    return False


def is_modular(lattice):
    """Modularity verdict as ``(is_modular, witness_or_None)``."""
    return lattice.modular, lattice.modularity_witness
