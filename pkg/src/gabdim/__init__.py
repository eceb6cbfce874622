"""Gabriel dimension of intervals in finite modular lattices."""

from importlib import resources

from .classes import (ClassFlags, IntervalSet, NotBasic, TooLarge, basic_closure, classify, crt,
                      dvs, enumerate_basic_sets, enumerate_division_sets, forall_exists, gab, smp)
from .dimension import (ConstructionChains, DimensionTable, Filtration, dimension_table,
                        gab_filtration, gdim, l_construction)
from .formats import (LatticeDocument, export_dot, format_lattice_text, load_lattice,
                      parse_lattice_text)
from .generators import GeneratorSpec, generate
from .intervals import (Interval, IntervalTable, enumerate_intervals, is_subinterval,
                        perspectivity_map, similarity_witness)
from .lattice import (CycleInCovers, Lattice, LatticeError, NoBoundedStructure, NotALattice,
                      NotModular, build_lattice, is_modular)
from .report import write_report
from .verify import verify_theorems


def fixture_text(name):
    """Text of a bundled lattice file, e.g. ``fixture_text("m3")``."""
    return resources.files(__name__).joinpath("data", f"{name}.lat").read_text(encoding="utf-8")


def fixture(name):
    return load_lattice(fixture_text(name))


def fixture_names():
    return sorted(p.name[:-4] for p in resources.files(__name__).joinpath("data").iterdir()
                  if p.name.endswith(".lat"))
