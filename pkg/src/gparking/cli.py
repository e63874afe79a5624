"""Command-line front end: ``gparking <subcommand> ...``.

Exit status is 0 on success, 1 when an input fails validation (the witness is
printed), and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import formats
from .diffuse import diffuse_to_orientation, enumerate_diffuse, is_diffuse, orientation_to_diffuse
from .errors import GParkingError, NotDiffuse, NotParkingFunction
from .graph import NAMED_GRAPHS, named_graph, random_connected_graph
from .orientations import (
    enumerate_acyclic,
    enumerate_unique_source,
    extended_dhar,
    orientation_to_parking,
)
from .parking import (
    count_by_inclusion_exclusion,
    enumerate_maximum,
    enumerate_parking,
    is_parking,
)
from .polynomials import (
    DEFAULT_EDGE_LIMIT,
    chromatic_polynomial,
    parking_generating_polynomial,
    spanning_tree_count,
    tutte_polynomial,
)
from .products import canonical_qn, qn_dom_count, qn_total_count
from .selfcheck import run_selftest
from .trees import all_spanning_trees, parking_to_tree, tree_to_parking

LIMIT_ENV = "GPARKING_LIMIT"


class ValidationFailure(Exception):
    pass


def _load_graph(name):
    path = Path(name)
    if path.exists():
        return formats.read_graph(path.read_text())
    if name.lower() in NAMED_GRAPHS:
        return named_graph(name)
    raise ValidationFailure(f"no graph file or named graph {name!r}")


def _records(path):
    return formats.split_records(Path(path).read_text())


def _emit(objs, fmt, out):
    first = True
    for obj in objs:
        if fmt == "tsv":
            out.write(formats.tsv(obj) + "\n")
        else:
            if not first:
                out.write("\n")
            out.write(formats.text(obj))
        first = False


def _setstr(vs):
    return "{" + ",".join(map(str, sorted(vs))) + "}"


def _emit_value(name, value, fmt, out):
    out.write(f"{name}\t{value}\n" if fmt == "tsv" else f"{value}\n")


def _default_limit():
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_EDGE_LIMIT


def cmd_verify_pf(args, out):
    g = _load_graph(args.graph)
    failed = False
    for rec in _records(args.file):
        root, values = formats.parse_parking(rec)
        result = is_parking(g, root, values)
        if result:
            order = " ".join(map(str, result.order))
            out.write(f"parking\torder {order}\n" if args.format == "tsv" else f"parking; burn order {order}\n")
        else:
            failed = True
            residual = _setstr(result.residual)
            out.write(
                f"not-parking\tresidual {residual}\n" if args.format == "tsv"
                else f"not parking; unburnt residual {residual}\n"
            )
    return 1 if failed else 0


def cmd_verify_diffuse(args, out):
    g = _load_graph(args.graph)
    failed = False
    for rec in _records(args.file):
        result = is_diffuse(g, formats.parse_diffuse(rec))
        if result:
            order = " ".join(map(str, result.order))
            out.write(f"diffuse\torder {order}\n" if args.format == "tsv" else f"diffuse; peel order {order}\n")
        else:
            failed = True
            residual = _setstr(result.residual)
            out.write(
                f"not-diffuse\tresidual {residual}\n" if args.format == "tsv"
                else f"not diffuse; stuck residual {residual}\n"
            )
    return 1 if failed else 0


def cmd_enumerate(args, out):
    g = _load_graph(args.graph)
    q = args.root
    kind = args.kind
    if kind == "pf":
        objs = enumerate_parking(g, q)
    elif kind == "maxpf":
        objs = enumerate_maximum(g, q)
    elif kind == "trees":
        objs = all_spanning_trees(g)
    elif kind == "orientations":
        objs = enumerate_acyclic(g) if args.all else enumerate_unique_source(g, q)
    else:
        objs = enumerate_diffuse(g, total=g.m)
    _emit(objs, args.format, out)
    return 0


def cmd_convert(args, out):
    g = _load_graph(args.graph)
    q = args.root
    conv = {
        "pf2tree": lambda r: parking_to_tree(formats.read_parking(r, g)),
        "tree2pf": lambda r: tree_to_parking(formats.read_tree(r, g), q),
        "pf2orient": lambda r: extended_dhar(formats.read_parking(r, g)),
        "orient2pf": lambda r: orientation_to_parking(formats.read_orientation(r, g), q),
        "diffuse2orient": lambda r: diffuse_to_orientation(formats.read_diffuse(r, g)),
        "orient2diffuse": lambda r: orientation_to_diffuse(formats.read_orientation(r, g)),
    }[args.kind]
    _emit((conv(r) for r in _records(args.file)), args.format, out)
    return 0


def cmd_count(args, out):
    g = _load_graph(args.graph)
    q = args.root
    if args.kind == "pf":
        value = sum(1 for _ in enumerate_parking(g, q))
    elif args.kind == "maxpf":
        value = sum(1 for _ in enumerate_unique_source(g, q))
    elif args.kind == "trees":
        value = spanning_tree_count(g)
    else:
        value = count_by_inclusion_exclusion(g, q)
    _emit_value(args.kind, value, args.format, out)
    return 0


def cmd_poly(args, out):
    g = _load_graph(args.graph)
    limit = args.limit if args.limit is not None else _default_limit()
    if args.kind == "tutte":
        lines = formats.bivariate_terms(tutte_polynomial(g, limit))
    elif args.kind == "chromatic":
        lines = formats.univariate_terms(chromatic_polynomial(g, limit), "x")
    else:
        lines = formats.univariate_terms(parking_generating_polynomial(g, args.root), "y")
    for ln in lines:
        out.write(("\t".join(ln.split()) if args.format == "tsv" else ln) + "\n")
    return 0


def cmd_qn(args, out):
    if args.kind == "canonical":
        _emit([canonical_qn(args.n)], args.format, out)
    else:
        _emit_value("dom", qn_dom_count(args.n), args.format, out)
        _emit_value("total", qn_total_count(args.n), args.format, out)
    return 0


def cmd_selftest(args, out):
    if args.graph == "random":
        rng = random.Random(args.seed)
        g = random_connected_graph(6, 0.5, rng)
    else:
        g = _load_graph(args.graph)
    ok = True
    for name, passed, detail in run_selftest(g):
        ok &= passed
        status = "PASS" if passed else "FAIL"
        out.write(f"{status}\t{name}\t{detail}\n" if args.format == "tsv" else f"{status} {name}: {detail}\n")
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="gparking", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    common.add_argument("--root", type=int, default=0)
    common.add_argument("--limit", type=int, default=None, help=f"edge limit for polynomials (env {LIMIT_ENV})")
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-pf", parents=[common], help="burn-test parking functions")
    s.add_argument("graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify_pf)

    s = sub.add_parser("verify-diffuse", parents=[common], help="peel-test diffuse states")
    s.add_argument("graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify_diffuse)

    s = sub.add_parser("enumerate", parents=[common], help="list objects of a graph")
    s.add_argument("kind", choices=("pf", "maxpf", "trees", "orientations", "diffuse"))
    s.add_argument("graph")
    s.add_argument("--all", action="store_true", help="orientations: every acyclic one, not only unique-source")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("convert", parents=[common], help="apply a bijection to every record of a file")
    s.add_argument("kind", choices=("pf2tree", "tree2pf", "pf2orient", "orient2pf", "diffuse2orient", "orient2diffuse"))
    s.add_argument("graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("count", parents=[common], help="count objects of a graph")
    s.add_argument("kind", choices=("pf", "maxpf", "trees", "ie"))
    s.add_argument("graph")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("poly", parents=[common], help="print a polynomial as sparse terms")
    s.add_argument("kind", choices=("tutte", "chromatic", "parkgen"))
    s.add_argument("graph")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("qn", parents=[common], help="n-cube canonical function and closed-form counts")
    s.add_argument("kind", choices=("canonical", "counts"))
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_qn)

    s = sub.add_parser("selftest", parents=[common], help="cross-check all counts on one graph")
    s.add_argument("graph", help="graph file, named graph, or 'random' (uses --seed)")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (NotParkingFunction, NotDiffuse) as exc:
        out.write(f"error: {exc}; residual {_setstr(exc.residual)}\n")
        return 1
    except (GParkingError, ValidationFailure, OSError) as exc:
        out.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
