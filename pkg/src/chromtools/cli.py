"""Command-line entry point: ``chromtools <command> ...``.

Exit status is 0 when every check passed, 1 when a check failed and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bounds, conjecture, families
from .chroma import chromatic_polynomial
from .errors import ChromToolsError
from .graph import Graph, from_graph6, read_graph6_lines, to_graph6
from .poly import as_rational, format_rational

SCHEMA = 1
OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print(text)


def _coeff_table(poly) -> dict:
    return {str(d): format_rational(poly[d]) for d in range(poly.degree, -1, -1)}


# chromatic

def _read_graphs(source: str) -> list[Graph]:
    if source == "-":
        return list(read_graph6_lines(sys.stdin))
    if os.path.isfile(source):
        with open(source) as fh:
            return list(read_graph6_lines(fh))
    return [from_graph6(source)]


def cmd_chromatic(args) -> int:
    graphs = _read_graphs(args.graph)
    rows, lines = [], []
    for g in graphs:
        pi = chromatic_polynomial(g)
        rows.append({"graph6": to_graph6(g), "order": g.n, "size": g.m,
                     "coefficients": _coeff_table(pi), "polynomial": str(pi)})
        lines.append(f"{to_graph6(g)}\tn={g.n} m={g.m}\t{pi}")
    _emit({"kind": "chromatic", "graphs": rows}, args.json, "\n".join(lines))
    return OK


# family

def cmd_family(args) -> int:
    spec = families.spec_from_json(args.kind, args.spec)
    g = families.build(spec)
    engine = chromatic_polynomial(g)
    closed = families.closed_form(spec)
    agrees = None if closed is None else closed == engine
    payload = {
        "kind": "family",
        "family": args.kind,
        "spec": families.spec_to_json(spec),
        "graph6": to_graph6(g),
        "order": g.n,
        "size": g.m,
        "closed_form": None if closed is None else closed.to_json(),
        "engine": engine.to_json(),
        "engine_matches_closed_form": agrees,
    }
    shown = engine if closed is None else closed
    text = "\n".join([
        f"{args.kind} {json.dumps(families.spec_to_json(spec), sort_keys=True)}",
        f"graph6: {to_graph6(g)}  (n={g.n}, m={g.m})",
        f"pi(x) = {shown}",
        "closed form: none (engine only)" if closed is None
        else f"closed form matches engine: {'yes' if agrees else 'NO'}",
    ])
    _emit(payload, args.json, text)
    return FAILED if agrees is False else OK


# bounds

def _grid_kwargs(lemma: str, grid_json: Optional[str]) -> dict:
    if grid_json is None:
        return {}
    try:
        grid = json.loads(grid_json)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--grid is not valid JSON: {exc}") from None
    if not isinstance(grid, dict):
        raise UsageError("--grid must be a JSON object with keys 'x' and/or 'max'")
    unknown = set(grid) - {"x", "max"}
    if unknown:
        raise UsageError(f"unknown --grid keys: {sorted(unknown)}")
    kwargs = {}
    if "x" in grid:
        if not isinstance(grid["x"], list) or not grid["x"]:
            raise UsageError("--grid 'x' must be a nonempty list of rationals")
        kwargs["xs"] = tuple(as_rational(v if not isinstance(v, float) else str(v)) for v in grid["x"])
    if "max" in grid:
        if isinstance(grid["max"], bool) or not isinstance(grid["max"], int) or grid["max"] < 1:
            raise UsageError("--grid 'max' must be a positive integer")
        key = {"k33bound": "max_size", "generalproductbound": "max_p",
               "cactusbound": "max_p"}.get(lemma, "max_size")
        kwargs[key] = grid["max"]
    return kwargs


def cmd_bounds(args) -> int:
    if args.lemma not in bounds.GRIDS:
        raise UsageError(f"unknown lemma id {args.lemma!r}; choose from {sorted(bounds.GRIDS)}")
    reports = list(bounds.GRIDS[args.lemma](**_grid_kwargs(args.lemma, args.grid)))
    failures = [r for r in reports if not r.holds]
    payload = {
        "kind": "bounds",
        "lemma": args.lemma,
        "checked": len(reports),
        "failures": len(failures),
        "reports": [r.to_json() for r in (reports if args.all else failures)],
        "passed": not failures,
    }
    lines = [f"{args.lemma}: {len(reports) - len(failures)}/{len(reports)} comparisons hold"]
    for r in failures:
        lines.append(f"  FAILS {r.params} at x={format_rational(r.x)}: "
                     f"{format_rational(r.lhs)} > {format_rational(r.rhs)}")
    _emit(payload, args.json, "\n".join(lines))
    return FAILED if failures else OK


# certify

def cmd_certify(args) -> int:
    if args.target == "k33son":
        cert = bounds.k33son_certificate(**({"t": args.parameter} if args.parameter else {}))
    else:
        cert = bounds.cactusson_certificate(**({"p": args.parameter} if args.parameter else {}))
    data = cert.to_json()
    if not args.full:
        data.pop("polynomial")
    root = cert.root
    text = "\n".join([
        f"{cert.name} (parameter {cert.parameter}): degree {cert.polynomial.degree}, "
        f"leading coefficient {cert.polynomial.lc}",
        "largest real root: none" if root is None
        else f"largest real root in [{float(root.lo):.9f}, {float(root.hi):.9f}] "
             f"(width {float(root.width):.2e})",
        f"positive for all x >= {format_rational(cert.x0)}: {'yes' if cert.positive else 'NO'}",
        f"certificate: {'ok' if cert.ok else 'FAILED'}",
    ])
    _emit({"kind": "certificate", "certificate": data, "passed": cert.ok}, args.json, text)
    return OK if cert.ok else FAILED


# verify

def cmd_verify(args) -> int:
    if args.target == "conjecture":
        report = conjecture.verify_conjecture(args.order, workers=args.workers)
    elif args.target == "tomescu3":
        report = conjecture.verify_tomescu3(args.order)
    else:
        if args.k is None:
            raise UsageError("verify cliquebound needs --k")
        report = conjecture.verify_clique_bound(args.order, args.k)
    data = report.to_json(timing=args.timing)
    data.pop("schema")
    lines = [
        f"{report.kind} n={report.order}: {report.checked} graphs checked, "
        f"{len(report.violations)} violations",
        f"extremal graphs: {len(report.extremal)} (expected {report.expected_extremal_count}, "
        f"{'match' if report.extremal_matches else 'MISMATCH'})",
    ]
    lines += [f"  {g6}" for g6 in sorted(report.extremal)]
    for v in report.violations:
        lines.append(f"  VIOLATION {v}")
    for g6 in report.integer_check_failures:
        lines.append(f"  CROSS-CHECK FAILED {g6}")
    if args.timing:
        lines.append(f"runtime: {report.runtime:.3f}s")
    _emit(data, args.json, "\n".join(lines))
    return OK if report.passed else FAILED


# remark / explore

def cmd_remark(args) -> int:
    report = conjecture.sk4_remark_report()
    report.pop("schema")
    lines = [f"SK4 (3,4,4): {report['graph6']}, order {report['order']}",
             f"pi - bound = {report['difference']}"]
    lines += [f"  at x={x}: {v}" for x, v in report["difference_at"].items()]
    lines += [f"  {name}: {value}" for name, value in report["checks"].items()]
    root = report["largest_root_of_difference"]
    if root is not None:
        lines.append(f"largest root of difference ~ {root['approx']:.9f}")
    _emit(report, args.json, "\n".join(lines))
    return OK if report["passed"] else FAILED


def cmd_explore(args) -> int:
    if args.max_size < 1:
        raise UsageError("--max-size must be positive")
    report = conjecture.k33_threshold_explore(conjecture.k33_specs(args.max_size))
    report.pop("schema")
    worst = report["max_largest_root"]
    lines = [f"K_{{3,3}} subdivisions with path sizes <= {args.max_size}: {report['specs']} specs",
             "max largest root of bound - pi: "
             + ("none" if worst is None else f"{worst['approx']:.6f}")]
    _emit(report, args.json, "\n".join(lines))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromtools", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial of graph6 input")
    p.add_argument("graph", help="graph6 string, a file of graph6 lines, or - for stdin")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("family", parents=[common], help="build a family member and cross-check its closed form")
    p.add_argument("kind", choices=families.FAMILY_KINDS)
    p.add_argument("--spec", required=True, help='JSON parameters, e.g. {"s1": 2, "s2": 1, "s3": 3}')
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bounds", parents=[common], help="sweep a bounding lemma over a grid")
    p.add_argument("lemma", help=", ".join(sorted(bounds.GRIDS)))
    p.add_argument("--grid", help="JSON object with optional keys 'x' (list) and 'max' (int)")
    p.add_argument("--all", action="store_true", help="list every comparison, not only failures")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", parents=[common], help="root-isolation certificates")
    p.add_argument("target", choices=["k33son", "cactusson"])
    p.add_argument("--parameter", type=int, help="override t (k33son) or p (cactusson)")
    p.add_argument("--full", action="store_true", help="include the polynomial coefficients")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", parents=[common], help="exhaustive small-order verification")
    p.add_argument("target", choices=["conjecture", "tomescu3", "cliquebound"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="report wall-clock runtime")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("remark", parents=[common], help="subdivided K4 counterexample report")
    p.add_argument("target", choices=["sk4"])
    p.set_defaults(func=cmd_remark)

    p = sub.add_parser("explore", parents=[common], help="exploratory threshold search")
    p.add_argument("target", choices=["k33"])
    p.add_argument("--max-size", type=int, default=1)
    p.set_defaults(func=cmd_explore)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ChromToolsError, ValueError, TypeError, KeyError) as exc:
        print(f"chromtools {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
