"""Command-line interface.

Exit codes: 0 success (or a valid labeling), 1 invalid labeling, 2 bad
arguments or inadmissible parameters, 3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import formats
from .closed_form import (
    LabelScheme,
    NotAdmissibleError,
    admissible_shifts,
    is_certified_optimal,
    label_optimal,
    labels_from_scheme,
)
from .graph import BundleSpec, Kind, build_bundle, to_dot, to_edgelist
from .labeling import LabelCountMismatch, verify_labeling
from .solver import DEFAULT_BUDGET, lambda_exact

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# (kind, ell, scheme, a) for the L(2,1) examples on C_9 over C_7
FIGURE_CONFIGS = [
    (Kind.DIRECT, 3, "f", 1),
    (Kind.DIRECT, 4, "f", 2),
    (Kind.DIRECT, 6, "g", 1),
    (Kind.DIRECT, 1, "g", 2),
    (Kind.CARTESIAN, 6, "f", 1),
    (Kind.CARTESIAN, 1, "f", 2),
    (Kind.CARTESIAN, 3, "g", 1),
    (Kind.CARTESIAN, 4, "g", 2),
]


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_bundle_args(p: argparse.ArgumentParser, with_ell: bool = True) -> None:
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("-m", type=int, required=True, help="base cycle order")
    p.add_argument("-n", type=int, required=True, help="fibre cycle order")
    if with_ell:
        p.add_argument("--ell", type=int, required=True, help="cyclic shift of the twisted edges")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bundlelabel",
        description="L(d,1)-labelings of graph bundles of cycles over cycles",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log solver progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write the bundle graph")
    _add_bundle_args(p)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    _add_output(p)

    p = sub.add_parser("label", help="closed-form labeling of span 2d+2")
    _add_bundle_args(p)
    p.add_argument("-d", type=_positive, required=True)
    p.add_argument("--format", choices=["grid", "csv", "json"], default="grid")
    p.add_argument("--certificate", help="write the certificate JSON here (default: standard error)")
    _add_output(p)

    p = sub.add_parser("verify", help="check a labeling JSON document")
    p.add_argument("file", help="labeling JSON file, or - for standard input")

    p = sub.add_parser("shifts", help="list admissible shifts with certificates")
    _add_bundle_args(p, with_ell=False)
    p.add_argument("-d", type=_positive, required=True)

    p = sub.add_parser("lambda", help="exact lambda number by backtracking")
    _add_bundle_args(p)
    p.add_argument("-d", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="search node limit")
    p.add_argument("--reflect", action="store_true", help="halve the root branching by label reflection")

    p = sub.add_parser("figure", help="print the eight L(2,1) grids on C_9 over C_7")
    _add_output(p)
    return parser


def _spec(args) -> BundleSpec:
    try:
        return BundleSpec(Kind(args.kind), args.m, args.n, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    spec = _spec(args)
    graph = build_bundle(spec)
    text = to_edgelist(graph) if args.format == "edgelist" else to_dot(graph, spec.n)
    _write(text, args.output)
    return EXIT_OK


def cmd_label(args) -> int:
    spec = _spec(args)
    labeling, cert = label_optimal(spec, args.d)
    writer = {"grid": formats.to_grid, "csv": formats.to_csv, "json": formats.to_json}[args.format]
    _write(writer(spec, labeling), args.output)
    cert_doc = cert.to_dict()
    cert_doc["optimal"] = is_certified_optimal(args.d)
    cert_text = json.dumps(cert_doc) + "\n"
    if args.certificate:
        _write(cert_text, args.certificate)
    else:
        sys.stderr.write(cert_text)
    if not is_certified_optimal(args.d):
        sys.stderr.write(f"span {2 * args.d + 2} is an upper bound only for d={args.d}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file) as fh:
                text = fh.read()
        spec, labeling = formats.from_json(text)
        report = verify_labeling(build_bundle(spec), labeling)
    except (OSError, LabelCountMismatch) as exc:
        raise UsageError(str(exc)) from exc
    if report.valid:
        print(f"valid, span {report.span}")
        return EXIT_OK
    print(f"invalid, {len(report.violations)} violations, span {report.span}")
    for v in report.violations:
        (iu, ju), (iv, jv) = spec.coord(v.u), spec.coord(v.v)
        print(f"  ({iu},{ju}) -- ({iv},{jv}) distance {v.distance} gap {v.gap}")
    return EXIT_INVALID


def cmd_shifts(args) -> int:
    if args.m < 3 or args.n < 3:
        raise UsageError("m and n must be at least 3")
    shifts = admissible_shifts(Kind(args.kind), args.m, args.n, args.d)
    for ell, found in shifts.items():
        for sch, cert in found:
            print(f"ell={ell} scheme={sch.name} {json.dumps(cert.to_dict())}")
    if not shifts:
        print("no admissible shift")
    return EXIT_OK


def cmd_lambda(args) -> int:
    spec = _spec(args)
    result = lambda_exact(build_bundle(spec), args.d, budget=args.budget, reflect_root=args.reflect)
    if result.timed_out:
        print(f"budget exhausted: {result.lower} <= lambda <= {result.upper}")
        print(f"nodes {result.nodes_explored}")
        return EXIT_BUDGET
    print(f"lambda {result.lam}")
    print(f"nodes {result.nodes_explored}")
    sys.stdout.write(formats.to_grid(spec, result.witness))
    return EXIT_OK


def cmd_figure(args) -> int:
    d, m, n = 2, 9, 7
    chunks = []
    for kind, ell, scheme, a in FIGURE_CONFIGS:
        spec = BundleSpec(kind, m, n, ell)
        sch = LabelScheme(d, scheme, a)
        labeling = labels_from_scheme(spec, sch)
        report = verify_labeling(build_bundle(spec), labeling)
        status = f"valid, span {report.span}" if report.valid else "INVALID"
        chunks.append(f"# {kind.value} ell={ell} {sch.name}: {status}\n" + formats.to_grid(spec, labeling))
    _write("\n".join(chunks), args.output)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "label": cmd_label,
    "verify": cmd_verify,
    "shifts": cmd_shifts,
    "lambda": cmd_lambda,
    "figure": cmd_figure,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, NotAdmissibleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
