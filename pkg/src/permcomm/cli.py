"""Command-line front end.

Exit codes: 0 every check passed, 1 some check failed, 2 usage or
configuration error, 3 an enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .catalog import bundled_catalog, load_catalog
from .commprob import AUDIT, pr_centralizer, pr_pairs, pr_star
from .config import Config, ConfigError, load_config
from .corpus import builtin_corpus, group_by_name
from .errors import (BadCycleNotation, DegreeMismatch, DuplicateLabel, EnumerationCapExceeded,
                     FormulaMismatch, IoFailure, NotAMember, NotSoluble, PreconditionNotMet,
                     UnknownSelector)
from .report import ReportDocument, emit_report, to_jsonable
from .selection import resolve_selector
from .structure import structure_report
from .verify import corpus_checks, dashboard, example31, example52, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _global_flags(default):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", default=default, help="key = value configuration file")
    p.add_argument("--cap", type=int, default=default, help="enumeration cap")
    p.add_argument("--seed", type=int, default=default, help="sampling seed")
    p.add_argument("--json", dest="json_path", default=default, help="write a JSON report")
    p.add_argument("--csv", dest="csv_path", default=default, help="write a CSV report")
    p.add_argument("--catalog", default=default, help="catalog file or directory of *.cat files")
    return p


def build_parser() -> argparse.ArgumentParser:
    top = _global_flags(None)
    # flags may also follow the subcommand; SUPPRESS keeps the top-level value
    sub_flags = _global_flags(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="permcomm", parents=[top],
                                     description="Exact commuting probabilities in permutation groups.")
    parser.add_argument("--version", action="version", version=f"permcomm {__version__}")
    areas = parser.add_subparsers(dest="area", required=True)

    group = areas.add_parser("group", help="group structure").add_subparsers(dest="cmd", required=True)
    info = group.add_parser("info", parents=[sub_flags], help="structure report for one group")
    info.add_argument("--group", required=True)

    prob = areas.add_parser("prob", help="commuting probabilities").add_subparsers(dest="cmd", required=True)
    for name in ("pr", "prstar"):
        c = prob.add_parser(name, parents=[sub_flags])
        c.add_argument("--group", required=True)
        c.add_argument("--x", required=True, help="subgroup selector")
        c.add_argument("--y", required=True, help="subgroup selector")
        if name == "prstar":
            c.add_argument("--mode", choices=("exhaustive", "witness"), default="exhaustive")

    ver = areas.add_parser("verify", help="verification checks").add_subparsers(dest="cmd", required=True)
    lem = ver.add_parser("lemmas", parents=[sub_flags], help="corpus checks and seeded sampling suites")
    lem.add_argument("--corpus", help="directory of catalog files added to the built-in corpus")
    lem.add_argument("--samples", type=int, default=200)
    e31 = ver.add_parser("example31", parents=[sub_flags], help="products of dihedral groups")
    e31.add_argument("--primes", default="3,5,7,11")
    e31.add_argument("--mode", choices=("auto", "ambient", "per-factor"), default="auto")
    e52 = ver.add_parser("example52", parents=[sub_flags], help="products of C_p wr S_5")
    e52.add_argument("--primes", default="7,11")
    e52.add_argument("--scale", choices=("model", "full", "full-witness"), default="model")

    rep = areas.add_parser("report", help="reports").add_subparsers(dest="cmd", required=True)
    dash = rep.add_parser("dashboard", parents=[sub_flags], help="theorem dashboard for one group")
    dash.add_argument("--group", required=True)
    dash.add_argument("--theorem", required=True, help="T1.1 .. T1.5, T1.3(k), L3.1, P3.2, L3.4")
    return parser


def _primes(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise _Usage(f"bad prime list {text!r}") from None


def _config(args) -> Config:
    cfg = load_config(args.config) if args.config else Config()
    return cfg.with_overrides(enumerationCap=args.cap, seed=args.seed)


def _catalog(args, limits):
    groups = bundled_catalog(limits)
    if args.catalog:
        groups += load_catalog(args.catalog, limits)
    return groups


def _print(obj):
    print(json.dumps(to_jsonable(obj), sort_keys=True, indent=2))


def _run(args, cfg: Config, doc: ReportDocument) -> int:
    limits = cfg.limits()
    key = (args.area, args.cmd)

    def timed(kind, fn):
        t = time.perf_counter()
        out = fn()
        doc.add(kind, out, (time.perf_counter() - t) * 1000 if cfg.timing else None)
        return out

    if key == ("group", "info"):
        G = group_by_name(args.group, _catalog(args, limits), limits)
        doc.add_group(G)
        rep = timed("structure", lambda: structure_report(G))
        _print(rep.to_json())
        return EXIT_OK

    if args.area == "prob":
        G = group_by_name(args.group, _catalog(args, limits), limits)
        doc.add_group(G)
        X, Y = resolve_selector(G, args.x), resolve_selector(G, args.y)
        if args.cmd == "pr":
            def both():
                a, b = pr_pairs(X, Y), pr_centralizer(X, Y)
                AUDIT.record(X, Y, a, b)
                if a != b:
                    raise FormulaMismatch(f"pair count {a} != centralizer sum {b}")
                return {"group": G.label, "x": args.x, "y": args.y, "value": a,
                        "pairCount": a, "centralizerSum": b}
            out = timed("pr", both)
            print(f"Pr({args.x}, {args.y}) = {out['value']}")
            print(f"  pair count:      {out['pairCount']}")
            print(f"  centralizer sum: {out['centralizerSum']}")
            return EXIT_OK
        rep = timed("prstar", lambda: pr_star(X, Y, mode=args.mode))
        _print(rep.to_json())
        return EXIT_OK

    if key == ("verify", "lemmas"):
        corpus = builtin_corpus(limits) + bundled_catalog(limits)
        if args.corpus:
            corpus += load_catalog(args.corpus, limits)
        for G in corpus:
            doc.add_group(G)
        if args.samples < 1:
            raise _Usage("--samples must be positive")
        before = AUDIT.instances, len(AUDIT.mismatches)
        results = corpus_checks(corpus, seed=cfg.seed, samples=args.samples, workers=cfg.workers)
        for r in results:
            doc.add("check", r)
        counts = summarize(results)
        for r in results:
            if r.failed:
                print(f"FAIL {r.check_id} {r.group_label}")
        doc.add("summary", {"counts": counts, "formulaAudit": {
            "instances": AUDIT.instances - before[0],
            "mismatches": len(AUDIT.mismatches) - before[1]}})
        print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        return EXIT_FAIL if counts["fail"] else EXIT_OK

    if key == ("verify", "example31"):
        r = timed("check", lambda: example31(_primes(args.primes), mode=args.mode))
        print(f"{r.status.upper()} {r.check_id} {r.group_label}")
        _print(r.details)
        return EXIT_FAIL if r.failed else EXIT_OK

    if key == ("verify", "example52"):
        r = timed("check", lambda: example52(_primes(args.primes), scale=args.scale, limits=limits))
        print(f"{r.status.upper()} {r.check_id} {r.group_label}")
        summary = {k: r.details[k] for k in ("perFactor", "primeInPi", "indexFstar2")
                   if k in r.details}
        summary["prStar"] = r.details["prStarWitness"]["value"]
        _print(summary)
        return EXIT_FAIL if r.failed else EXIT_OK

    if key == ("report", "dashboard"):
        G = group_by_name(args.group, _catalog(args, limits), limits)
        doc.add_group(G)
        try:
            d = timed("dashboard", lambda: dashboard(G, args.theorem))
        except ValueError as exc:
            raise _Usage(str(exc)) from None
        _print(d.to_json())
        return EXIT_OK
    raise _Usage(f"unknown command {args.area} {args.cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
    except (ConfigError, IoFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = ReportDocument(tool_version=__version__, config=cfg.snapshot())
    try:
        code = _run(args, cfg, doc)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (_Usage, UnknownSelector, NotSoluble, PreconditionNotMet, BadCycleNotation,
            DegreeMismatch, DuplicateLabel, NotAMember, IoFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.json_path:
            emit_report(doc, args.json_path, "json")
        if args.csv_path:
            emit_report(doc, args.csv_path, "csv")
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
