"""Command-line front end.

Subcommands: info, check, verify-paper, catalog list, iwmax, classify.
Every number printed here is produced by a library call; the CLI only
formats.  The shipped ledger path can be overridden with the
DEGENLAB_LEDGER environment variable.

Exit codes for `check`: 0 pass/proved, 2 fail/refuted, 3 sampling-only
(refutation not found), 1 I/O or parse errors.  `verify-paper` exits 0
exactly when the report contains no FAIL entries.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .algebra import (
    annihilator,
    dim_square,
    engel_degree,
    identity_flags,
    is_nilpotent,
)
from .contraction import iw_max
from .degeneration import verify_degeneration, verify_nondegeneration
from .verification_db import (
    ParseError,
    _ref_from_json,
    hasse_dot,
    load_ledger,
    report_to_json_bytes,
    run_ledger,
    shipped_ledger_path,
)

DEFAULT_SEED = 20240917


def _ledger_path(args) -> str:
    if getattr(args, "ledger", None):
        return args.ledger
    return os.environ.get("DEGENLAB_LEDGER") or shipped_ledger_path()


def _emit(args, human_lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_info(args) -> int:
    try:
        tensor = catalog.instantiate(args.name, args.dim)
    except (catalog.DimensionOutOfRange, catalog.UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    flags = identity_flags(tensor)
    nil, nil_index = is_nilpotent(tensor)
    partition, _ = iw_max(tensor, seed=args.seed)
    levels = catalog.level_lookup(args.name, args.dim)
    payload = {
        "name": args.name,
        "dim": args.dim,
        "dim_square": dim_square(tensor),
        "ann_dim": annihilator(tensor).dim,
        "nilpotent": nil,
        "nilpotency_index": nil_index,
        "engel_degree": engel_degree(tensor, tensor.dim + 1),
        "jacobi": flags.jacobi,
        "malcev": flags.malcev,
        "iw_max": list(partition),
        "level": levels.level.to_json_obj(),
        "infinite_level": levels.infinite_level.to_json_obj(),
    }
    lines = [
        f"{args.name} at dimension {args.dim}",
        f"  dim A^2         {payload['dim_square']}",
        f"  dim Ann         {payload['ann_dim']}",
        f"  nilpotent       {nil} (index {nil_index})",
        f"  engel degree    {payload['engel_degree']}",
        f"  jacobi / malcev {flags.jacobi} / {flags.malcev}",
        f"  IW-max          {tuple(partition)}",
        f"  level           {levels.level}",
        f"  infinite level  {levels.infinite_level}",
    ]
    _emit(args, lines, payload)
    return 0


def cmd_check(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if "kind" in obj:
            from .degeneration import NonDegenerationWitness

            witness = NonDegenerationWitness(
                kind=obj["kind"],
                source=_ref_from_json(obj["source"]),
                target=_ref_from_json(obj["target"]),
                payload=obj.get("payload", {}),
                provenance=obj.get("provenance", ""),
                witness_id=obj.get("id", "cli-witness"),
            )
            verdict = verify_nondegeneration(
                witness, trials=args.trials, seed=args.seed
            )
        else:
            from .degeneration import DegenerationCertificate

            cert = DegenerationCertificate(
                source=_ref_from_json(obj["source"]),
                target=_ref_from_json(obj["target"]),
                basis_rows=tuple(obj["basis"]),
                provenance=obj.get("provenance", ""),
                cert_id=obj.get("id", "cli-cert"),
            )
            verdict = verify_degeneration(cert)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {
        "status": verdict.status,
        "reason": verdict.reason,
        "data": {k: str(v) for k, v in verdict.data.items()},
    }
    _emit(args, [f"{verdict.status}: {verdict.reason}" if verdict.reason
                 else verdict.status], payload)
    if verdict.status in ("pass", "proved"):
        return 0
    if verdict.status == "refutation_not_found":
        return 3
    return 2


def cmd_verify_paper(args) -> int:
    try:
        ledger = load_ledger(_ledger_path(args))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = run_ledger(
        ledger, seed=args.seed, trials=args.trials, dims=args.dims
    )
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.json").write_bytes(report_to_json_bytes(report))
        dims = sorted({
            int(e["source"].rsplit("@", 1)[1]) for e in report["certificates"]
        })
        for dim in dims:
            (out_dir / f"hasse_dim{dim}.dot").write_text(
                hasse_dot(report, dim), encoding="utf-8"
            )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    counts = report["summary"]["counts"]
    lines = [f"report written to {out_dir}/report.json"]
    lines += [f"  {k:<20} {v}" for k, v in sorted(counts.items())]
    lines.append(f"  failures: {report['summary']['failures']}")
    _emit(args, lines, report["summary"])
    return 0 if report["summary"]["failures"] == 0 else 2


def cmd_catalog_table(args) -> int:
    try:
        tensor = catalog.instantiate(args.name, args.dim)
    except (catalog.DimensionOutOfRange, catalog.UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(tensor.to_json_obj(), indent=2, sort_keys=True))
    return 0


def cmd_catalog_list(args) -> int:
    rows = []
    for key in catalog.MANIFEST_FAMILIES:
        name = catalog.parse_name(key)
        lo, hi = catalog._bound(name)
        iw = catalog.expected_iw_max(name)
        rows.append({
            "name": key,
            "min_dim": lo,
            "max_dim": hi,
            "iw_max": "ones" if isinstance(iw, str) else list(iw),
        })
    lines = [f"{r['name']:<22} dims {r['min_dim']}..{r['max_dim'] or ''}"
             f"  IW-max {r['iw_max']}" for r in rows]
    _emit(args, lines, rows)
    return 0


def cmd_iwmax(args) -> int:
    try:
        tensor = catalog.instantiate(args.name, args.dim)
    except (catalog.DimensionOutOfRange, catalog.UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    partition, witness = iw_max(tensor, seed=args.seed, trials=args.trials)
    payload = {
        "name": args.name, "dim": args.dim,
        "partition": list(partition),
        "witness": [str(x) for x in witness],
    }
    _emit(args, [f"IW-max partition {tuple(partition)}",
                 f"witness element {payload['witness']}"], payload)
    return 0


def cmd_classify(args) -> int:
    try:
        if args.file:
            with open(args.file, "r", encoding="utf-8") as fh:
                from .algebra import StructureTensor

                tensor = StructureTensor.from_json_obj(json.load(fh))
        else:
            tensor = catalog.instantiate(args.name, args.dim)
    except (OSError, json.JSONDecodeError, KeyError,
            catalog.DimensionOutOfRange, catalog.UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        result = catalog.classify_T22(tensor)
    except catalog.PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    label = getattr(result, "key", repr(result))
    _emit(args, [label], {"classification": label})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenlab",
        description="Exact catalog and certificate checker for degenerations "
                    "of anticommutative nilpotent algebras of small level.",
    )
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariants of a catalog algebra")
    p.add_argument("name")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="verify a certificate or witness file")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-paper",
                       help="run the shipped ledger and write the report")
    p.add_argument("--dims", type=int, nargs="*", default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--out", default="verify-out")
    p.add_argument("--ledger", default=None,
                   help="override the ledger path (also: DEGENLAB_LEDGER)")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("catalog", help="catalog operations")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    pl = csub.add_parser("list", help="list the catalog families")
    pl.set_defaults(func=cmd_catalog_list)
    pt = csub.add_parser("table", help="emit a multiplication table as JSON")
    pt.add_argument("name")
    pt.add_argument("--dim", type=int, required=True)
    pt.set_defaults(func=cmd_catalog_table)

    p = sub.add_parser("iwmax", help="dominant one-dimensional contraction")
    p.add_argument("name")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_iwmax)

    p = sub.add_parser("classify",
                       help="canonical name of a two-block-contraction algebra")
    p.add_argument("name", nargs="?")
    p.add_argument("--dim", type=int)
    p.add_argument("--file", default=None,
                   help="algebra JSON file instead of a catalog name")
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
