"""Command-line entry point: ``vtcert certify ...`` and ``vtcert graph ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import certify as C
from .graph import (NAMED_GRAPHS, Graph, generalized_petersen, lexicographic, line_graph, named,
                    x_m1m2t)
from .structure import DEFAULT_CAP

PROPS = ("vt", "et", "arc", "cayley", "connected", "regular")

CONSTRUCTORS_HELP = (
    "constructors: " + ", ".join(NAMED_GRAPHS)
    + ", gp N K, x M1 M2 T [corrected|literal], line NAME [PARAMS...], lex NAME1 NAME2"
    + " (inline parameters allowed, e.g. cycle(33))"
)


def _ints(params: list[str]) -> list[int]:
    try:
        return [int(x) for x in params]
    except ValueError as exc:
        raise ValueError(f"expected integer parameters, got {params}") from exc


def build_graph(constructor: str, params: list[str]) -> Graph:
    key = constructor.lower()
    if key == "gp":
        return generalized_petersen(*_ints(params))
    if key == "x":
        reading = "corrected"
        if params and params[-1] in ("corrected", "literal"):
            reading = params[-1]
            params = params[:-1]
        m1, m2, t = _ints(params)
        return x_m1m2t(m1, m2, t, reading)[0]
    if key == "line":
        if not params:
            raise ValueError("line needs a graph name")
        return line_graph(named(params[0], *_ints(params[1:])))
    if key == "lex":
        if len(params) != 2:
            raise ValueError("lex needs two graph names")
        return lexicographic(named(params[0]), named(params[1]))
    return named(constructor, *_ints(params))


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vtcert", description="Vertex-transitive non-Cayley certification")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def report_opts(p):
        p.add_argument("--aut-cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--strict", action="store_true", help="treat INCONCLUSIVE as failure")
        p.add_argument("--timings", action="store_true", help="include wall times (not deterministic)")

    cert = sub.add_parser("certify", help="certify graph families").add_subparsers(dest="what", required=True)
    fam = cert.add_parser("family", help="certify X_{3,p,t} for every t with t^2 = -1 mod p")
    fam.add_argument("--p", type=int, required=True)
    fam.add_argument("--reading", choices=("literal", "corrected", "both"), default="corrected")
    report_opts(fam)
    exc = cert.add_parser("exceptional", help="certify the small line-graph cases")
    report_opts(exc)

    graph = sub.add_parser("graph", help="build or check graphs").add_subparsers(dest="what", required=True)
    b = graph.add_parser("build", help="write a constructed graph in text format",
                         epilog=CONSTRUCTORS_HELP)
    b.add_argument("constructor")
    b.add_argument("params", nargs="*")
    b.add_argument("--out", help="output path (stdout when omitted)")
    chk = graph.add_parser("check", help="check properties of a graph file")
    chk.add_argument("path")
    chk.add_argument("--props", default="vt,cayley,arc", help=f"comma list from {','.join(PROPS)}")
    report_opts(chk)
    return ap


def _emit(args, certs, config, notes=()) -> int:
    text = C.emit_report(certs, args.format, args.out, config=config, notes=notes, timings=args.timings)
    if args.out is None:
        sys.stdout.write(text)
    return C.exit_code(certs, args.strict)


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "certify" and args.what == "family":
            readings = ("corrected", "literal") if args.reading == "both" else (args.reading,)
            cfg = C.RunConfig(args.p, readings, args.aut_cap, args.out, args.format)
            certs = C.certify_family(cfg)
            return _emit(args, certs, {"mode": "family", **cfg.to_dict()}, C.family_notes(cfg.p))
        if args.command == "certify" and args.what == "exceptional":
            if args.aut_cap < 1:
                raise ValueError("aut_cap must be positive")
            certs = C.certify_exceptional(args.aut_cap)
            notes = ["six further small graphs of the classification are given only as figures "
                     "in the source and are not reproduced here"]
            return _emit(args, certs, {"mode": "exceptional", "aut_cap": args.aut_cap}, notes)
        if args.command == "graph" and args.what == "build":
            X = build_graph(args.constructor, args.params)
            if args.out:
                X.write(args.out)
            else:
                sys.stdout.write(X.to_text())
            return 0
        if args.command == "graph" and args.what == "check":
            props = [p.strip() for p in args.props.split(",") if p.strip()]
            bad = [p for p in props if p not in PROPS]
            if bad:
                raise ValueError(f"unknown properties {bad}; choose from {PROPS}")
            X = Graph.read(args.path)
            cert = C.certify_graph(X, props, args.aut_cap, graph_id=Path(args.path).name)
            return _emit(args, [cert], {"mode": "check", "props": props, "aut_cap": args.aut_cap})
    except (ValueError, KeyError, OSError) as exc:
        print(f"vtcert: error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
