"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports a violated claim,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from . import claims
from .antiregular import (AntiregularError, AntiregularSpec, antiregular,
                          antiregular_complement, antiregular_poly_closed)
from .engine import MemoLimitExceeded, independence_poly, matching_poly
from .graph import (Graph, GraphError, fixture_path, line_graph, read_edge_list)
from .polynomial import (Polynomial, PolynomialError, RootReport, format_poly, is_log_concave,
                         is_unimodal, real_roots)
from .report import all_passed, format_rows
from .threshold import (BuildingStringError, PatternSpec, build_threshold, enumerate_threshold,
                        pattern_survey, recognize_threshold)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_edges_path(name: str) -> Path:
    """Use ``name`` as given, falling back to the bundled fixture of the same file name."""
    path = Path(name)
    if path.exists():
        return path
    bundled = fixture_path(path.name)
    if bundled.exists() and (path.parent == Path(".") or path.parent.name == "fixtures"):
        return bundled
    raise UsageError(f"cannot read edge list {name!r}: no such file")


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "edges", None):
        path = resolve_edges_path(args.edges)
        return read_edge_list(path), str(args.edges)
    if getattr(args, "string", None):
        return build_threshold(args.string), args.string
    if getattr(args, "antiregular", None) is not None:
        return antiregular(args.antiregular), f"A_{args.antiregular}"
    raise UsageError("no graph input given")


def _emit_records(out: TextIO, records: Iterable[dict]) -> None:
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def _fmt_fraction(q: Fraction) -> str:
    return str(q)


def roots_lines(report: RootReport) -> list[str]:
    lines = [f"real roots: {report.count}"]
    for lo, hi in report.intervals:
        tag = "exact root" if hi in report.exact_roots else f"~ {float((lo + hi) / 2):.6f}"
        lines.append(f"  ({_fmt_fraction(lo)}, {_fmt_fraction(hi)}]    # {tag}")
    return lines


def roots_record(report: RootReport) -> dict:
    return {
        "count": report.count,
        "intervals": [[str(lo), str(hi)] for lo, hi in report.intervals],
        "exact_roots": [str(r) for r in report.exact_roots],
    }


def poly_summary(p: Polynomial) -> dict:
    return {
        "coeffs": list(p.coeffs),
        "alpha": p.degree,
        "fibonacci": p(1),
        "alternating": p(-1),
        "unimodal": is_unimodal(p),
        "log_concave": is_log_concave(p),
    }


# --- verbs --------------------------------------------------------------------

def cmd_compute(args, out: TextIO) -> int:
    g, label = _load_graph(args)
    p = independence_poly(g)
    summary = poly_summary(p)
    threshold = recognize_threshold(g)
    if args.format == "records":
        _emit_records(out, [{"input": label, "n": g.n, "m": g.num_edges,
                             "threshold_string": threshold, **summary}])
        return EXIT_OK
    out.write(f"{format_poly(p)}\n")
    out.write(f"n={g.n} m={g.num_edges} alpha={p.degree} fibonacci={summary['fibonacci']} "
              f"alternating={summary['alternating']}\n")
    out.write(f"unimodal={summary['unimodal']} log_concave={summary['log_concave']} "
              f"threshold={threshold or 'no'}\n")
    return EXIT_OK


def cmd_antiregular(args, out: TextIO) -> int:
    n = args.n
    variant = "disconnected" if args.complement else "connected"
    g = antiregular_complement(n) if args.complement else antiregular(n)
    p = independence_poly(g)
    closed = antiregular_poly_closed(AntiregularSpec(n, variant))
    summary = poly_summary(p)
    report = real_roots(p) if args.roots else None
    status = EXIT_OK if closed == p else EXIT_VIOLATION
    if args.format == "records":
        rec = {"n": n, "variant": variant, "closed_form_matches": closed == p, **summary}
        if report is not None:
            rec["roots"] = roots_record(report)
        _emit_records(out, [rec])
        return status
    name = f"complement of A_{n}" if args.complement else f"A_{n}"
    out.write(f"I({name}; x) = {format_poly(p)}\n")
    out.write(f"closed form {'matches' if closed == p else 'DIFFERS: ' + format_poly(closed)}\n")
    out.write(f"fibonacci={summary['fibonacci']} alternating={summary['alternating']} "
              f"log_concave={summary['log_concave']}\n")
    if report is not None:
        out.write("\n".join(roots_lines(report)) + "\n")
    return status


def cmd_roots(args, out: TextIO) -> int:
    if args.coeffs:
        try:
            p = Polynomial(int(tok) for tok in args.coeffs.split(","))
        except ValueError:
            raise UsageError(f"malformed coefficient list {args.coeffs!r}") from None
    else:
        p = independence_poly(_load_graph(args)[0])
    report = real_roots(p)
    if args.format == "records":
        _emit_records(out, [{"coeffs": list(p.coeffs), **roots_record(report)}])
    else:
        out.write(f"{format_poly(p)}\n" + "\n".join(roots_lines(report)) + "\n")
    return EXIT_OK


def cmd_matching(args, out: TextIO) -> int:
    g, label = _load_graph(args)
    p = matching_poly(g)
    if args.format == "records":
        _emit_records(out, [{"input": label, "line_graph_n": line_graph(g).n,
                             "coeffs": list(p.coeffs)}])
    else:
        out.write(f"{format_poly(p)}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    groups = [g.strip() for g in args.claims.split(",") if g.strip()]
    unknown = [g for g in groups if g != "all" and g not in claims.CLAIM_GROUPS]
    if unknown:
        raise UsageError(f"unknown claim group(s) {unknown}; "
                         f"choose from all,{','.join(claims.CLAIM_GROUPS)}")
    rows = claims.verify_claims(groups, args.nmax, args.jobs)
    if args.format == "records":
        _emit_records(out, (r.as_record() for r in rows))
    else:
        out.write(format_rows(rows) + "\n")
        failed = sum(not r.passed for r in rows)
        out.write(f"{len(rows) - failed}/{len(rows)} checks passed\n")
    return EXIT_OK if all_passed(rows) else EXIT_VIOLATION


def cmd_census(args, out: TextIO) -> int:
    records = list(enumerate_threshold(args.n, args.jobs))
    distinct = len({r.poly.coeffs for r in records})
    if args.format == "records":
        _emit_records(out, (r.as_record() for r in records))
    else:
        out.write(f"{'string':<{args.n}}  degrees  polynomial\n")
        for r in records:
            out.write(f"{r.string}  {','.join(map(str, r.degrees))}  {format_poly(r.poly)}\n")
        out.write(f"{len(records)} threshold graphs, {distinct} distinct polynomials\n")
    return EXIT_OK if distinct == len(records) else EXIT_VIOLATION


def _parse_orders(text: str) -> tuple[int, int]:
    for sep in ("..", ":", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"malformed order range {text!r}; use A..B") from None


def cmd_survey(args, out: TextIO) -> int:
    spec = PatternSpec(args.prefix, args.period, _parse_orders(args.orders))
    records = list(pattern_survey(spec, args.jobs))
    if args.format == "records":
        _emit_records(out, (r.as_record() for r in records))
        return EXIT_OK
    width = max([len("string")] + [len(r.string) + 1 for r in records])
    out.write(f"order  {'string':<{width}}  unimodal  log_concave  real_roots  real_rooted"
              "  polynomial\n")
    for r in records:
        shown = r.string + ("*" if r.partial_period else "")
        out.write(f"{r.order:>5}  {shown:<{width}}  {r.unimodal!s:<8}  {r.log_concave!s:<11}  "
                  f"{r.real_root_count:>10}  {r.all_roots_real!s:<11}  {format_poly(r.poly)}\n")
    if any(r.partial_period for r in records):
        out.write("* final period repetition truncated to reach the order\n")
    return EXIT_OK


# --- parser -------------------------------------------------------------------

def _graph_source(p: argparse.ArgumentParser, with_antiregular: bool = False,
                  with_coeffs: bool = False) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' then 'u v' lines)")
    src.add_argument("--string", metavar="BITS", help="threshold building string, e.g. 00011")
    if with_antiregular:
        src.add_argument("--antiregular", metavar="N", type=int, help="connected antiregular A_N")
    if with_coeffs:
        src.add_argument("--coeffs", metavar="C0,C1,...", help="integer coefficients, lowest first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indpoly",
                                     description="Exact independence polynomials of graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text",
                        help="human-readable text or one JSON record per line")
    pool = argparse.ArgumentParser(add_help=False)
    pool.add_argument("--jobs", type=int, default=None,
                      help="worker processes (default: available processors)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", parents=[common], help="independence polynomial of a graph")
    _graph_source(p, with_antiregular=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("antiregular", parents=[common], help="antiregular graph report")
    p.add_argument("n", type=int)
    p.add_argument("--complement", action="store_true", help="use the disconnected graph")
    p.add_argument("--roots", action="store_true", help="isolate the real roots")
    p.set_defaults(func=cmd_antiregular)

    p = sub.add_parser("roots", parents=[common], help="exact real-root isolation")
    _graph_source(p, with_antiregular=True, with_coeffs=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("matching", parents=[common], help="matching polynomial via line graph")
    _graph_source(p)
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("verify", parents=[common, pool], help="check the stated claims")
    p.add_argument("--claims", default="all",
                   help=f"comma list from: all,{','.join(claims.CLAIM_GROUPS)}")
    p.add_argument("--nmax", type=int, default=16, help="largest antiregular order checked")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common, pool], help="all threshold graphs of order N")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("survey", parents=[common, pool], help="prefix + periodic pattern survey")
    p.add_argument("--prefix", default="", help="fixed leading bits")
    p.add_argument("--period", required=True, help="repeated bits")
    p.add_argument("--orders", required=True, help="order range A..B")
    p.set_defaults(func=cmd_survey)
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, GraphError, BuildingStringError, AntiregularError, PolynomialError,
            MemoLimitExceeded, OSError) as exc:
        err.write(f"indpoly {args.verb}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
