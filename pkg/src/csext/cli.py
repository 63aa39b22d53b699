"""Command-line front door: oracle queries, inspection, tables and sweeps.

Exit codes: 0 success or all rows matched, 1 usage error, 2 out-of-scope
query, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import combinatorics as comb
from . import harness
from ._version import __version__
from .errors import ScopeError, ScopeReason
from .oracle import ext1_gl, ext1_sym, is_prime

CACHE_ENV = "CSEXT_CACHE_DIR"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCOPE = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """argparse parser that reports usage problems via UsageError (exit 1)."""

    def error(self, message):
        raise UsageError(message)


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}")


def parse_weight(text: str) -> comb.Weight:
    return parse_ints(text, "weight")


def parse_partition(text: str) -> comb.Partition:
    parts = parse_ints(text, "partition")
    try:
        return comb.as_partition(parts)
    except ValueError as e:
        raise UsageError(str(e))


def parse_prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise UsageError(f"p must be an integer, got {text!r}")
    if not is_prime(p):
        raise UsageError(f"p must be prime, got {p}")
    return p


def parse_primes(text: str) -> list[int]:
    return [parse_prime(tok) for tok in text.split(",")]


def build_parser() -> Parser:
    parser = Parser(prog="csext", description=__doc__)
    parser.add_argument("--version", action="version", version=f"csext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ext = sub.add_parser("ext", help="extension-space dimension between two irreducibles")
    ext_sub = ext.add_subparsers(dest="side", required=True)
    for side, label in (("gl", "weight"), ("sym", "partition")):
        q = ext_sub.add_parser(side)
        q.add_argument("--p", required=True)
        q.add_argument("--lambda", dest="lam", required=True,
                       help=f"first {label}, comma-separated")
        q.add_argument("--mu", required=True, help=f"second {label}, comma-separated")
        q.add_argument("--format", choices=("text", "json"), default="text")

    ins = sub.add_parser("inspect", help="combinatorial attributes of one weight/partition")
    ins.add_argument("--p", required=True)
    group = ins.add_mutually_exclusive_group(required=True)
    group.add_argument("--weight")
    group.add_argument("--partition")
    ins.add_argument("--n", type=int, default=None,
                     help="ambient rank to pad a partition into a weight")
    ins.add_argument("--format", choices=("text", "json"), default="text")

    ver = sub.add_parser("verify", help="run a verification sweep")
    ver_sub = ver.add_subparsers(dest="kind", required=True)
    vc = ver_sub.add_parser("comb")
    vc.add_argument("--p", required=True, help="comma-separated primes")
    vc.add_argument("--n", type=int, required=True, help="maximum rank")
    vc.add_argument("--max-entry", type=int, required=True)
    vs = ver_sub.add_parser("sym")
    vs.add_argument("--p", required=True, help="odd prime")
    vs.add_argument("--m", required=True, help="degree or comma-separated degrees")
    vs.add_argument("--cap", type=int, default=None, help="degree cap override (8 opt-in)")
    vs.add_argument("--cache-dir", default=None,
                    help=f"Specht cache directory (default ${CACHE_ENV})")
    for v in (vc, vs):
        v.add_argument("--format", choices=("text", "json", "csv"), default="text")
        v.add_argument("--out", default=None, help="write the report here instead of stdout")

    tab = sub.add_parser("table", help="splittability/bigness listing")
    tab.add_argument("--p", required=True)
    tab.add_argument("--m", type=int, default=None, help="partition degree")
    tab.add_argument("--n", type=int, default=None, help="weight rank")
    tab.add_argument("--max-entry", type=int, default=None)
    tab.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


def cmd_ext(args) -> int:
    p = parse_prime(args.p)
    if args.side == "gl":
        lam, mu = parse_weight(args.lam), parse_weight(args.mu)
        answer = ext1_gl(lam, mu, p)
    else:
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        answer = ext1_sym(lam, mu, p)
    if args.format == "json":
        print(json.dumps({"dim": answer.dim,
                          "witness": list(answer.witness) if answer.witness else None}))
    elif answer.dim == 1:
        print(f"dim=1 witness={harness.fmt_tuple(answer.witness)}")
    else:
        print("dim=0")
    return EXIT_OK


def _weight_attributes(w: comb.Weight, p: int) -> dict:
    rr = comb.removable_rows(w)
    info: dict = {
        "weight": list(w),
        "rank": len(w),
        "sum": sum(w),
        "p": p,
        "removable_rows": list(rr.rows),
        "psi": comb.psi(w),
        "p_restricted": comb.is_p_restricted(w, p),
    }
    if info["p_restricted"]:
        info["cs"] = comb.is_cs_weight(w, p)
        info["big"] = comb.is_big_weight(w, p)
        info["hat"] = list(comb.hat(w, p)) if info["big"] else None
    else:
        info["cs"] = info["big"] = info["hat"] = None
        info["scope"] = "NotPRestricted"
    return info


def _partition_attributes(lam: comb.Partition, p: int) -> dict:
    info: dict = {
        "partition": list(lam),
        "degree": comb.degree(lam),
        "height": comb.height(lam),
        "p": p,
        "chi": comb.chi(lam),
        "p_regular": comb.is_p_regular(lam, p),
        "cs": comb.is_cs_partition(lam, p),
        "has_rim_p_hook": comb.has_rim_p_hook(lam, p),
        "big": comb.is_big_partition(lam, p),
    }
    if info["big"] and info["p_regular"]:
        info["tilde"] = list(comb.tilde(lam, p))
    else:
        info["tilde"] = None
        if info["big"]:
            info["scope"] = "NotPRegular"
    return info


def _print_attributes(info: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(info))
        return
    for key, val in info.items():
        if isinstance(val, dict):
            for inner_key, inner_val in val.items():
                if isinstance(inner_val, list):
                    inner_val = harness.fmt_tuple(inner_val)
                print(f"{key}.{inner_key}={inner_val}")
        else:
            if isinstance(val, list):
                val = harness.fmt_tuple(val)
            print(f"{key}={val}")


def cmd_inspect(args) -> int:
    p = parse_prime(args.p)
    if args.weight is not None:
        w = parse_weight(args.weight)
        if not comb.is_dominant(w):
            raise ScopeError(ScopeReason.NON_DOMINANT, f"weight {w} is not dominant")
        info = _weight_attributes(w, p)
    else:
        lam = parse_partition(args.partition)
        info = _partition_attributes(lam, p)
        if args.n is not None:
            padded = comb.pad(lam, args.n)
            info["as_weight"] = _weight_attributes(padded, p)
    _print_attributes(info, args.format == "json")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.kind == "comb":
        report = harness.sweep_comb(parse_primes(args.p), args.n, args.max_entry)
        reports = [report]
    else:
        p = parse_prime(args.p)
        if p == 2:
            raise UsageError("verify sym requires an odd prime")
        cache_dir = args.cache_dir or os.environ.get(CACHE_ENV) or None
        degrees = parse_ints(args.m, "--m")
        reports = [harness.sweep_sym(p, m, cap=args.cap, cache_dir=cache_dir) for m in degrees]

    rendered = []
    for report in reports:
        if args.format == "json":
            rendered.append(report.to_json())
        elif args.format == "csv":
            rendered.append(report.to_csv())
        else:
            rendered.append(report.to_text())
    text = "\n".join(rendered)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as e:
            raise UsageError(f"cannot write report to {args.out}: {e}")
    else:
        print(text)
    return EXIT_MISMATCH if any(r.mismatches for r in reports) else EXIT_OK


def cmd_table(args) -> int:
    p = parse_prime(args.p)
    if (args.m is None) == (args.n is None):
        raise UsageError("table needs exactly one of --m (partitions) or --n (weights)")
    rows: list[dict] = []
    if args.m is not None:
        for lam in comb.enum_partitions(args.m):
            rows.append(_partition_attributes(lam, p))
    else:
        if args.max_entry is None:
            raise UsageError("table --n requires --max-entry")
        for w in comb.enum_dominant_weights_bounded(args.n, args.max_entry):
            if comb.is_p_restricted(w, p):
                rows.append(_weight_attributes(w, p))
    if args.format == "json":
        print(json.dumps(rows))
        return EXIT_OK
    if args.format == "csv":
        columns: list[str] = []
        for info in rows:
            for key in info:
                if key not in columns:
                    columns.append(key)
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for info in rows:
            writer.writerow(
                [harness.fmt_tuple(v) if isinstance(v, list) else v for v in
                 (info.get(c) for c in columns)]
            )
        print(out.getvalue(), end="")
        return EXIT_OK
    for info in rows:
        shape = info.get("partition", info.get("weight"))
        flags = []
        for key in ("chi", "psi", "p_regular", "p_restricted", "cs", "big"):
            if key in info and info[key] is not None:
                flags.append(f"{key}={info[key]}")
        move = info.get("tilde") or info.get("hat")
        if move:
            flags.append(f"moves_to={harness.fmt_tuple(move)}")
        print(f"{harness.fmt_tuple(shape)}: {' '.join(flags)}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "ext":
            return cmd_ext(args)
        if args.command == "inspect":
            return cmd_inspect(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table":
            return cmd_table(args)
        raise UsageError(f"unknown command {args.command}")  # pragma: no cover
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ScopeError as e:
        print(f"out-of-scope: {e}", file=sys.stderr)
        return EXIT_SCOPE
    except ValueError as e:
        # covers malformed library inputs and the degree cap
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
