"""Command-line frontend.

Subcommands: enumerate, gram, reduce, det, stirling, semisimple, verify.
Output is deterministic for fixed inputs (stable orderings, stable key
order); big integers are serialized as decimal strings. Exit codes: 0
success, 1 parameter/validation error, 2 verification diff, 3 resource
guard exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from .determinant import det_blocks, det_direct
from .golden import published_gram_report, published_reduced_report
from .gram import (
    DEFAULT_GUARD,
    ResourceGuardError,
    WindowError,
    build_gram,
    enumerate_diagrams,
    projected_dimension,
)
from .reduction import reduce_gram
from .semisimplicity import verdict
from .stirling import gen_stirling_partition, gen_stirling_z2
from .verify import run_all_checks

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_DIFF = 2
EXIT_GUARD = 3


def _profile_args(args) -> tuple[int, int]:
    if args.algebra == "partition":
        if args.s is None:
            raise WindowError("partition algebra requires --s")
        return args.s, 0
    if args.s1 is None or args.s2 is None:
        raise WindowError(f"{args.algebra} algebra requires --s1 and --s2")
    return args.s1, args.s2


def _emit(args, payload: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _key_json(key) -> dict:
    return {
        "i": key.i,
        "alpha": [list(part) for part in key.alpha],
        "r1": key.r1,
        "r2": key.r2,
    }


def cmd_enumerate(args) -> int:
    s1, s2 = _profile_args(args)
    basis = enumerate_diagrams(args.algebra, args.k, s1, s2, args.guard)
    cells: list[dict] = []
    for key, _ in basis:
        cell = {"alpha": [list(p) for p in key.alpha], "r1": key.r1, "r2": key.r2}
        if cells and cells[-1]["alpha"] == cell["alpha"] and (cells[-1]["r1"], cells[-1]["r2"]) == (key.r1, key.r2):
            cells[-1]["size"] += 1
        else:
            cell["size"] = 1
            cells.append(cell)
    if args.format == "pretty":
        lines = [f"{args.algebra} k={args.k} profile ({s1}, {s2}): {len(basis)} diagrams"]
        for key, diagram in basis:
            lines.append(f"  {key.i:>3} alpha={key.alpha} r=({key.r1},{key.r2})  {diagram}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        payload = {
            "algebra": args.algebra,
            "k": args.k,
            "s1": s1,
            "s2": s2,
            "count": len(basis),
            "cells": cells,
            "diagrams": [
                {**_key_json(key), "blocks": str(diagram)} for key, diagram in basis
            ],
        }
        _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_OK


def cmd_gram(args) -> int:
    s1, s2 = _profile_args(args)
    gram = build_gram(args.algebra, args.k, s1, s2, args.guard)
    if args.format == "csv":
        lines = [",".join(str(p) for p in row) for row in gram.entries]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "pretty":
        width = max((len(str(p)) for row in gram.entries for p in row), default=1)
        lines = [" ".join(str(p).rjust(width) for p in row) for row in gram.entries]
        _emit(args, "\n".join(lines) + "\n")
    else:
        payload = {
            "algebra": gram.algebra,
            "k": gram.k,
            "s1": gram.s1,
            "s2": gram.s2,
            "keys": [
                {**_key_json(key), "diagram": str(diagram)}
                for key, diagram in zip(gram.keys, gram.diagrams)
            ],
            "entries": [[str(p) for p in row] for row in gram.entries],
        }
        _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    s1, s2 = _profile_args(args)
    gram = build_gram(args.algebra, args.k, s1, s2, args.guard)
    decomposition = reduce_gram(gram, method=args.method)
    checksum = hashlib.sha256(
        json.dumps(decomposition.transform).encode()
    ).hexdigest()
    payload = {
        "algebra": gram.algebra,
        "k": gram.k,
        "s1": gram.s1,
        "s2": gram.s2,
        "method": args.method,
        "transform_checksum": checksum,
        "offblock_violations": [list(v) for v in decomposition.offblock_violations],
        "blocks": [
            {
                "label": list(label),
                "keys": [_key_json(gram.keys[m]) for m in members],
                "entries": [[str(p) for p in row] for row in decomposition.block(label)],
            }
            for label, members in decomposition.cells
        ],
        "predicted": [
            {
                "label": list(label),
                "entries": [
                    [str(p) for p in row] for row in decomposition.predicted[label]
                ],
            }
            for label, _ in decomposition.cells
        ],
        "diffs": [
            {
                "informative": d.informative,
                "description": d.describe(),
            }
            for d in decomposition.diffs
        ],
    }
    _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_DIFF if decomposition.hard_diffs() else EXIT_OK


def cmd_det(args) -> int:
    s1, s2 = _profile_args(args)
    gram = build_gram(args.algebra, args.k, s1, s2, args.guard)
    direct = det_direct(gram.entries)
    decomposition = reduce_gram(gram)
    blocks = det_blocks(decomposition)
    payload = {
        "algebra": gram.algebra,
        "k": gram.k,
        "s1": gram.s1,
        "s2": gram.s2,
        "determinant": str(direct),
        "coefficients": direct.to_json(),
        "factored": [
            {"factor": str(poly), "multiplicity": mult} for poly, mult in blocks.factored
        ],
        "consistent": direct == blocks.poly,
    }
    _emit(args, json.dumps(payload, indent=1) + "\n")
    return EXIT_OK if payload["consistent"] else EXIT_DIFF


TABLE_LABELS = [(1, 2), (2, 0), (0, 3), (1, 1), (1, 0), (0, 2), (0, 1), (0, 0)]


def cmd_stirling(args) -> int:
    if args.algebra == "partition":
        if None in (args.s, args.r, args.p):
            raise WindowError("partition variant requires --s, --r, --p")
        value = gen_stirling_partition(args.s, args.r, args.p)
        _emit(args, json.dumps({"s": args.s, "r": args.r, "p": args.p, "value": str(value)}) + "\n")
        return EXIT_OK
    if args.s1 is None or args.s2 is None:
        raise WindowError("doubled variant requires --s1 and --s2")
    if args.table:
        header = ["(r1,r2) \\ (p1,p2)"] + [f"2.{p1}+{p2}" for p1, p2 in TABLE_LABELS]
        rows = [header]
        for r1, r2 in TABLE_LABELS:
            row = [f"2.{r1}+{r2}"]
            for p1, p2 in TABLE_LABELS:
                row.append(str(gen_stirling_z2(args.s1, args.s2, r1, r2, p1, p2)))
            rows.append(row)
        if args.format == "json":
            _emit(args, json.dumps({"s1": args.s1, "s2": args.s2, "table": rows}, indent=1) + "\n")
        else:
            widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
            lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    if None in (args.r1, args.r2, args.p1, args.p2):
        raise WindowError("need --r1 --r2 --p1 --p2 (or --table)")
    value = gen_stirling_z2(args.s1, args.s2, args.r1, args.r2, args.p1, args.p2)
    _emit(
        args,
        json.dumps(
            {
                "s1": args.s1,
                "s2": args.s2,
                "r1": args.r1,
                "r2": args.r2,
                "p1": args.p1,
                "p2": args.p2,
                "value": str(value),
            }
        )
        + "\n",
    )
    return EXIT_OK


def cmd_semisimple(args) -> int:
    q = None if args.q in (None, "x") else Fraction(args.q)
    result = verdict(args.algebra, args.k, q)
    _emit(args, json.dumps(result.to_json(), indent=1) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_all_checks(args.k)
    failures = 0
    lines = []
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        lines.append(f"{status}  {check.name:<24} {check.seconds:7.2f}s  {check.details}")
        failures += 0 if check.ok else 1
    gram = build_gram("signed", 3, 1, 0)
    report = published_gram_report(gram)
    golden_ok = report.permutation is not None and not report.hard_mismatches
    status = "PASS" if golden_ok else "FAIL"
    lines.append(
        f"{status}  published-34x34          "
        f"   hard mismatches: {len(report.hard_mismatches)}, documented slips: {len(report.slips)}"
    )
    for line in report.describe():
        lines.append(f"        {line}")
    reduced = published_reduced_report(reduce_gram(gram))
    blocks_ok = all(
        b["size_ok"] and b["diag_ok"] and b["structure_ok"] for b in reduced["scalar_blocks"]
    )
    rho = reduced["rho"]
    rho_ok = rho is not None and rho["size_ok"] and rho["diag_ok"] and not rho["diffs"]
    status = "PASS" if blocks_ok and rho_ok else "FAIL"
    lines.append(f"{status}  published-reduced-blocks    scalar blocks and tail block")
    failures += 0 if golden_ok and blocks_ok and rho_ok else 1
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_DIFF if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagram-gram",
        description="Exact Gram matrices, reductions, and semisimplicity verdicts "
        "for three families of diagram algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_algebra=True):
        if need_algebra:
            p.add_argument("--algebra", choices=("partition", "z2", "signed"), required=True)
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--s", type=int, default=None, help="through count (partition)")
            p.add_argument("--s1", type=int, default=None)
            p.add_argument("--s2", type=int, default=None)
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--output", default=None)
        p.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                       help="maximum matrix dimension (default 2000)")

    p = sub.add_parser("enumerate", help="ordered diagram basis for a profile")
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("gram", help="Gram matrix for a profile")
    common(p)
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("reduce", help="block-diagonal reduction and closed-form diff")
    common(p)
    p.add_argument("--method", choices=("mobius", "sequential"), default="mobius")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("det", help="Gram determinant, direct and from blocks")
    common(p)
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("stirling", help="generalized coarser-diagram counts")
    p.add_argument("--algebra", choices=("partition", "z2", "signed"), default="z2")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--s1", type=int, default=None)
    p.add_argument("--s2", type=int, default=None)
    p.add_argument("--r1", type=int, default=None)
    p.add_argument("--r2", type=int, default=None)
    p.add_argument("--p1", type=int, default=None)
    p.add_argument("--p2", type=int, default=None)
    p.add_argument("--table", action="store_true", help="print the full 8x8 grid")
    common(p, need_algebra=False)
    p.set_defaults(fn=cmd_stirling)

    p = sub.add_parser("semisimple", help="semisimplicity verdict at exact rational q")
    p.add_argument("--algebra", choices=("partition", "z2", "signed"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", default=None, help='rational like "2" or "5/3"; omit for symbolic')
    common(p, need_algebra=False)
    p.set_defaults(fn=cmd_semisimple)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--k", type=int, default=3)
    common(p, need_algebra=False)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except WindowError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
