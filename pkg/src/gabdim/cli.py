"""
Command-line entry point.

Exit codes: 0 success (or every check passed), 1 a verification check
failed, 2 input or usage error, 3 precondition error (non-modular lattice,
non-basic set).
"""

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .classes import (DEFAULT_THRESHOLD, IntervalSet, NotBasic, TooLarge, basic_closure, crt,
                      dvs, forall_exists, gab, smp)
from .dimension import METHODS, dimension_table, gab_filtration, l_construction
from .formats import FormatError, export_dot, format_lattice_text, load_lattice
from .generators import KINDS, GeneratorSpec, OutOfBounds, generate
from .intervals import Interval, enumerate_intervals
from .lattice import LatticeError, NotModular
from .report import write_report
from .verify import verify_theorems

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

OPERATORS = {
    "basic": basic_closure,
    "dvs": dvs,
    "fa-exists": forall_exists,
    "smp": smp,
    "crt": crt,
    "gab": gab,
}

_GENERATOR_EXPR = re.compile(r"(%s):(\d+(?:,\d+)*)" % "|".join(KINDS))


class InputError(Exception):
    pass


def load_input(source):
    """A lattice from a file path, ``-`` (stdin) or a generator expression like ``divisor:60``."""
    if source == "-":
        return load_lattice(sys.stdin.read())
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return load_lattice(fh.read())
    m = _GENERATOR_EXPR.fullmatch(source)
    if m:
        params = tuple(int(p) for p in m.group(2).split(","))
        return generate(GeneratorSpec(m.group(1), params))
    raise InputError(f"{source}: no such file, and not a generator expression (kind:params)")


def _element(lattice, name):
    try:
        return lattice.index(name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None


def parse_interval(lattice, text, sep):
    parts = text.split(sep)
    if len(parts) != 2:
        raise InputError(f"bad interval {text!r}; expected lower{sep}upper")
    a, b = (_element(lattice, p.strip()) for p in parts)
    if not lattice.leq(a, b):
        raise InputError(f"[{parts[0]}, {parts[1]}] is not an interval")
    return Interval(a, b)


def parse_interval_list(lattice, text):
    """``0:a,b:1`` style list of intervals."""
    table = enumerate_intervals(lattice)
    items = [t for t in text.split(",") if t.strip()]
    return IntervalSet.of(table, [parse_interval(lattice, t, ":") for t in items])


def _label(lattice, iv):
    return f"{lattice.names[iv[0]]}:{lattice.names[iv[1]]}"


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _precheck_modular(lattice, args):
    if not getattr(args, "allow_nonmodular", False):
        lattice.require_modular()


def cmd_check(args):
    L = load_input(args.input)
    lines = [
        f"lattice {L.name}: {L.size} elements, {len(L.covers)} covers",
        f"bottom: {L.names[L.bottom]}",
        f"top: {L.names[L.top]}",
    ]
    if L.modular:
        lines.append("modular: yes")
    else:
        a, b, c = (L.names[x] for x in L.modularity_witness)
        lines.append(f"modular: no (witness a={a} b={b} c={c})")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_intervals(args):
    L = load_input(args.input)
    rows = ["index\tlower\tupper\ttrivial"]
    for i, iv in enumerate(enumerate_intervals(L)):
        rows.append(f"{i}\t{L.names[iv.lower]}\t{L.names[iv.upper]}\t{str(iv.trivial).lower()}")
    _emit(args, "\n".join(rows) + "\n")
    return EXIT_OK


def cmd_closure(args):
    L = load_input(args.input)
    _precheck_modular(L, args)
    S = parse_interval_list(L, args.set)
    if args.op in ("basic", "dvs") and not S:
        raise InputError("--set must name at least one interval")
    result = OPERATORS[args.op](S)
    flags = ",".join(result.flags.names()) or "none"
    rows = [f"# op={args.op} size={len(result)} flags={flags}", "lower\tupper"]
    rows += [f"{L.names[a]}\t{L.names[b]}" for a, b in result]
    _emit(args, "\n".join(rows) + "\n")
    return EXIT_OK


def cmd_filtration(args):
    L = load_input(args.input)
    seed = parse_interval_list(L, args.seed) if args.seed else None
    if seed is not None and not seed:
        raise InputError("--seed must name at least one interval")
    filt = gab_filtration(L, seed=seed, allow_nonmodular=args.allow_nonmodular)
    rows = ["index\tset_size\tadded"]
    previous = None
    for k, stage in enumerate(filt.stages):
        added = stage if previous is None else stage - previous
        rows.append(f"{k}\t{len(stage)}\t" + ",".join(_label(L, iv) for iv in added))
        previous = stage
    rows.append(f"# stabilization_index={filt.stabilization_index}")
    _emit(args, "\n".join(rows) + "\n")
    if args.figures:
        from .plotting import write_figures
        write_figures(args.figures, L, filt)
    return EXIT_OK


def cmd_gdim(args):
    L = load_input(args.input)
    _precheck_modular(L, args)
    dims = dimension_table(L, args.method, allow_nonmodular=args.allow_nonmodular)
    if args.interval:
        iv = parse_interval(L, args.interval, ",")
        _emit(args, f"{dims[iv]}\n")
    else:
        rows = ["lower\tupper\tgdim"]
        rows += [f"{L.names[a]}\t{L.names[b]}\t{d}" for a, b, d in dims.rows()]
        rows.append(f"# lattice dimension: {dims.lattice_dimension}")
        _emit(args, "\n".join(rows) + "\n")
    if args.figures:
        from .plotting import write_figures
        write_figures(args.figures, L, gab_filtration(L, allow_nonmodular=args.allow_nonmodular),
                      l_construction(L, allow_nonmodular=args.allow_nonmodular), dims)
    return EXIT_OK


def _verify_one(path, threshold):
    return verify_theorems(load_input(path), threshold)


def cmd_verify(args, parser):
    if args.allow_nonmodular:
        parser.error("--allow-nonmodular is not permitted with verify")
    if os.path.isdir(args.input):
        paths = sorted(os.path.join(args.input, f) for f in os.listdir(args.input)
                       if f.endswith(".lat"))
        if not paths:
            raise InputError(f"{args.input}: no .lat files")
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                reports = list(pool.map(_verify_one, paths, [args.threshold] * len(paths)))
        else:
            reports = [_verify_one(p, args.threshold) for p in paths]
        _emit(args, write_report(reports))
    else:
        reports = [_verify_one(args.input, args.threshold)]
        _emit(args, write_report(reports[0]))
    if args.figures:
        from .plotting import write_figures
        for r in reports:
            write_figures(args.figures, r.lattice, r.filtration, r.chains, r.dimensions)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_gen(args):
    params = tuple(int(p) for p in args.params.split(",") if p.strip())
    L = generate(GeneratorSpec(args.kind, params, args.seed))
    _emit(args, format_lattice_text(L))
    return EXIT_OK


def cmd_export_dot(args):
    _emit(args, export_dot(load_input(args.input)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gabdim",
        description="Gabriel dimension of intervals in finite modular lattices.",
        epilog="<in> is a lattice text file, '-' for stdin, or a generator "
               "expression such as divisor:60 or downset:6,3.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text, nonmodular=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", metavar="<in>")
        p.add_argument("--out", help="write output to this path instead of stdout")
        if nonmodular:
            p.add_argument("--allow-nonmodular", action="store_true",
                           help="run on a non-modular lattice without the usual guarantees")
        return p

    command("check", "lattice axioms and modularity verdict")
    command("intervals", "list every interval")
    p = command("closure", "apply one closure operator to a set of intervals", nonmodular=True)
    p.add_argument("--set", required=True, help="intervals as lower:upper pairs, e.g. 0:a,b:1")
    p.add_argument("--op", required=True, choices=sorted(OPERATORS))
    p = command("filtration", "stages of the Gabriel filtration", nonmodular=True)
    p.add_argument("--seed", help="basic seed set as lower:upper pairs (default: trivial intervals)")
    p.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
    p = command("gdim", "Gabriel dimension table", nonmodular=True)
    p.add_argument("--interval", help="single interval as lower,upper")
    p.add_argument("--method", choices=METHODS, default="filtration")
    p.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
    p = command("verify", "full check suite, JSON report (a directory verifies every .lat file)")
    p.add_argument("--allow-nonmodular", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD,
                   help="largest interval count for exhaustive checks over all basic sets")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for directory input")
    p.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
    command("export-dot", "Graphviz DOT of the cover relation")

    p = sub.add_parser("gen", help="emit a generated lattice in the text format")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--params", required=True, help="comma-separated naturals")
    p.add_argument("--seed", type=int, default=0, help="seed for the downset kind")
    p.add_argument("--out")
    return parser


HANDLERS = {
    "check": cmd_check,
    "intervals": cmd_intervals,
    "closure": cmd_closure,
    "filtration": cmd_filtration,
    "gdim": cmd_gdim,
    "gen": cmd_gen,
    "export-dot": cmd_export_dot,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, parser)
        return HANDLERS[args.command](args)
    except (NotModular, NotBasic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, FormatError, LatticeError, OutOfBounds, TooLarge, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
