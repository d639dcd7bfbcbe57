#!/usr/bin/env python3
"""
Command-line front end: constructions, certificate verification, bound tables,
exact search and exports.

Usage:
    python cli.py construct theorem3 --q 2 --out artifacts/t3_q2.cert
    python cli.py construct theorem5 --q 4 --out artifacts/t5_q4.cert
    python cli.py construct best-connected --n 12 --out artifacts/best_12.cert
    python cli.py verify artifacts/t3_q2.cert --connected [--json]
    python cli.py bounds --range 7..21 [--csv]
    python cli.py search --n 5 --mode connected [--budget 60]
    python cli.py table --max-n 5
    python cli.py export artifacts/t3_q2.cert --format dot --out artifacts/t3_q2.dot
    python cli.py plane --q 3 [--validate]

search and table read their defaults from configs/search_config.json (block
chosen by --mode); explicit flags always win. $PSEUDOACHROMATIC_MAX_WORKERS
caps every --n_jobs.

Exit status: 0 pass, 1 verification failure, 2 usage / parse / construction error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from colorings import certificate
from colorings.constructions import (connected_coloring_best, plane_representation, theorem3_coloring,
                                     theorem5_coloring)
from errors import ColoringError
from eval.bounds import bounds_table, parse_range
from eval.search import MODES, SearchConfig, exact_index
from eval.table_check import verify_table_prefix
from eval.verifier import VerifyConfig, class_size_histogram, verify
from geometry.galois_field import make_field
from geometry.projective_plane import build_plane, validate_axioms

PROJECT_ROOT = Path(__file__).resolve().parent
SEARCH_CONFIG = PROJECT_ROOT / "configs" / "search_config.json"
CONSTRUCTIONS = ("theorem3", "theorem5", "best-connected")

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def load_search_config(block: str) -> dict:
    if not SEARCH_CONFIG.exists():
        return {}
    with open(SEARCH_CONFIG) as f:
        return json.load(f).get(block, {})


def _banner(title: str) -> None:
    sep = "=" * 60
    print(f"{sep}\n  {title}\n{sep}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.kind == "best-connected":
        if args.n is None:
            raise ValueError("best-connected needs --n")
        coloring = connected_coloring_best(args.n, n_jobs=args.n_jobs)
    else:
        if args.q is None:
            raise ValueError(f"{args.kind} needs --q")
        build = theorem3_coloring if args.kind == "theorem3" else theorem5_coloring
        coloring = build(args.q, n_jobs=args.n_jobs)

    cert = certificate.Certificate.from_coloring(coloring)
    _banner(f"{args.kind}: n={coloring.n}  k={coloring.k}")
    if "previous_bound" in coloring.provenance:
        prev = coloring.provenance["previous_bound"]
        print(f"[INFO] previous lower bound q^3+q = {prev}, this coloring: {coloring.k} ({coloring.k - prev:+d})")
    hist = class_size_histogram(coloring)
    print("[INFO] class sizes: " + ", ".join(f"{s} edges x{c}" for s, c in sorted(hist.items())))
    if args.out:
        path = certificate.write(cert, args.out)
        print(f"[INFO] certificate written to {path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cert = certificate.read(args.path)
    coloring = cert.to_coloring()
    rep = None
    if coloring.partition is not None and cert.q is not None and cert.n == cert.q ** 2 + cert.q + 1:
        rep = plane_representation(cert.q)
    report = verify(coloring, rep=rep, config=VerifyConfig(require_connected=args.connected, n_jobs=args.n_jobs))
    ok = report.passed(require_connected=args.connected)
    if args.json:
        print(json.dumps(dict(report.to_dict(), passed=ok, required_connected=args.connected),
                         indent=2, sort_keys=True))
    else:
        _banner(f"verify {args.path}")
        for line in report.summary_lines():
            print(f"  {line}")
        print(f"[INFO] {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args) -> int:
    ns = range(args.n, args.n + 1) if args.n is not None else parse_range(args.range)
    if min(ns) < 2:
        raise ValueError("bounds need n >= 2 on every row")
    df = bounds_table(ns)
    if args.csv:
        sys.stdout.write(df.to_csv(index=False))
    else:
        print(df.to_string(index=False))
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig(n=args.n, mode=args.mode, time_budget=args.budget,
                       symmetry_breaking=args.symmetry_breaking, n_jobs=args.n_jobs, verbose=not args.json)
    res = exact_index(cfg)
    if args.out:
        path = certificate.write(certificate.Certificate.from_coloring(res.witness), args.out)
        print(f"[INFO] witness written to {path}", file=sys.stderr if args.json else sys.stdout)
    if args.json:
        print(json.dumps({"n": res.n, "mode": res.mode, "status": res.status, "lower": res.lower,
                          "upper": res.upper, "refuted": res.refuted, "nodes": res.nodes,
                          "seconds": round(res.seconds, 3)}, indent=2))
    else:
        print(res.summary())
    return EXIT_OK


def cmd_table(args) -> int:
    report = verify_table_prefix(args.max_n, budget=args.budget, n_jobs=args.n_jobs, verbose=True)
    report.print()
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_export(args) -> int:
    cert = certificate.read(args.path)
    text = certificate.export(cert, args.format)
    if args.out:
        Path(args.out).write_text(text)
        print(f"[INFO] {args.format} export written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_plane(args) -> int:
    plane = build_plane(make_field(args.q))
    if args.validate:
        report = validate_axioms(plane)
        for line in report.summary_lines():
            print(line)
        return EXIT_OK if report.passed else EXIT_FAIL
    sys.stdout.write(plane.dump())
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser(search_defaults: dict | None = None, table_defaults: dict | None = None) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description="Complete and connected edge-colorings of K_n from projective planes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a coloring and write its certificate")
    p.add_argument("kind", choices=CONSTRUCTIONS)
    p.add_argument("--q", type=int, default=None, help="plane order (theorem3, theorem5)")
    p.add_argument("--n", type=int, default=None, help="number of vertices (best-connected)")
    p.add_argument("--out", default=None, help="certificate path")
    p.add_argument("--n_jobs", type=int, default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("path")
    p.add_argument("--connected", action="store_true", help="also require every class to be connected")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--n_jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="analytic bounds table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--range", default="8..21", help="lo..hi, inclusive")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exact index of K_n by branch-and-bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="pseudoachromatic")
    p.add_argument("--budget", type=float, default=60.0, help="seconds; <= 0 for no limit")
    p.add_argument("--n_jobs", type=int, default=1)
    p.add_argument("--no_symmetry_breaking", dest="symmetry_breaking", action="store_false")
    p.add_argument("--out", default=None, help="write the witness certificate here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search, **(search_defaults or {}))

    p = sub.add_parser("table", help="compare search results with the small-n tables")
    p.add_argument("--max-n", dest="max_n", type=int, default=5)
    p.add_argument("--budget", type=float, default=60.0, help="seconds per (n, mode)")
    p.add_argument("--n_jobs", type=int, default=1)
    p.set_defaults(func=cmd_table, **(table_defaults or {}))

    p = sub.add_parser("export", help="DOT or CSV dump of a certificate")
    p.add_argument("path")
    p.add_argument("--format", choices=certificate.EXPORT_FORMATS, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("plane", help="print PG(2, q) (one line per plane line)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--validate", action="store_true", help="check the axioms instead of dumping")
    p.set_defaults(func=cmd_plane)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv

    # --- Pass 1: --mode picks the config block ---
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--mode", choices=MODES, default="pseudoachromatic")
    pre_args, _ = pre.parse_known_args(argv)

    # --- Pass 2: full parser with config-driven defaults ---
    ap = build_parser(load_search_config(pre_args.mode), load_search_config("table"))
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ColoringError, ValueError, OSError) as e:
        print(f"[ERROR] {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
