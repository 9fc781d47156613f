"""Command-line front end.

Subcommands: ``classes``, ``table``, ``branch``, ``fchar``, ``verify``.
Exit codes: 0 on success (all checks pass), 1 when a verification check
fails, 2 on usage or domain errors.

The table cache directory comes from ``--cache-dir``, falling back to the
``HOBCHAR_CACHE_DIR`` environment variable; ``--no-cache`` disables both.
Only ``table`` and ``fchar`` results are cached (they are the expensive
artifacts); branching matrices are cheap recombinations of cached tables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from hobchar import chains, embedding, hyperoct, oracle, reduction, symmetric
from hobchar.reports import CheckReport
from hobchar.serialize import (
    CACHE_ENV_VAR,
    CacheWarning,
    TableCache,
    document_from_branching,
    document_from_character_table,
    document_from_transition,
    render,
)
from hobchar.tables import (
    first_column_orthogonality_failure,
    first_orthogonality_failure,
)

SYM_DEFAULT_CAP = 12      # S_n degree for the formula pipeline
HOB_DEFAULT_CAP = 6       # rank for the formula pipeline
ORACLE_DEFAULT_CAP = 4    # rank for brute-force checks
ORACLE_HARD_CAP = 5

FORMATS = ("json", "csv", "latex", "pretty")
TABLE_KINDS = (
    "induced",
    "irreducible",
    "modified-induced",
    "modified-irreducible",
    "transition",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("--cache-dir", default=None, help="table cache directory")
    common.add_argument("--no-cache", action="store_true", help="disable the table cache")
    common.add_argument("--quiet", action="store_true", help="suppress warnings")
    common.add_argument(
        "--allow-slow",
        action="store_true",
        help="lift the desk-scale size caps (brute-force checks up to rank 5)",
    )

    parser = argparse.ArgumentParser(
        prog="hobchar",
        description="Exact character tables and branching matrices for "
        "symmetric and signed-permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", parents=[common], help="conjugacy classes and orders")
    p.add_argument("--group", choices=("sym", "hyperoct"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("table", parents=[common], help="character tables")
    p.add_argument("--group", choices=("sym", "hyperoct"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=TABLE_KINDS, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "branch", parents=[common], help="branching matrices for S_2n over rank n"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("irreducible", "induced"), required=True)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser(
        "fchar", parents=[common], help="coset permutation character of S_2n"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_fchar)

    p = sub.add_parser("verify", parents=[common], help="consistency checks")
    p.add_argument(
        "--check",
        choices=("eq8", "method-b", "oracle", "orthogonality", "all"),
        required=True,
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _check_cap(value, cap, what, allow_slow):
    if value < 1:
        raise ValueError(f"{what} must be >= 1, got {value}")
    if not allow_slow and value > cap:
        raise ValueError(
            f"{what} {value} exceeds the desk-scale cap {cap}; pass --allow-slow"
        )


def _cache_from(args) -> TableCache | None:
    if args.no_cache:
        return None
    root = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    return TableCache(root) if root else None


def _emit(args, text):
    sys.stdout.write(text)


def cmd_classes(args) -> int:
    if args.group == "sym":
        _check_cap(args.n, SYM_DEFAULT_CAP, "n", args.allow_slow)
        data = [(ct.label, order) for ct, order in symmetric.sym_classes(args.n)]
    else:
        _check_cap(args.n, HOB_DEFAULT_CAP, "n", args.allow_slow)
        data = [(a.label, order) for a, order in hyperoct.hob_classes(args.n)]
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "group": args.group,
            "n": args.n,
            "classes": [{"label": l, "order": o} for l, o in data],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        lines = ["label,order"] + [f'"{l}",{o}' for l, o in data]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "latex":
        lines = [r"\begin{tabular}{r|r}", r"class & order \\", r"\hline"]
        lines += [f"{l} & {o} \\\\" for l, o in data]
        lines.append(r"\end{tabular}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        width = max(len(l) for l, _ in data)
        lines = [f"{l.rjust(width)}  {o}" for l, o in data]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _compute_table_document(group, n, kind):
    if group == "sym":
        if kind == "induced":
            return document_from_character_table(
                symmetric.sym_induced_table(n), group, n, kind
            )
        if kind == "irreducible":
            return document_from_character_table(
                symmetric.sym_irreducible_table(n)[0], group, n, kind
            )
        if kind == "transition":
            return document_from_transition(symmetric.sym_irreducible_table(n)[1], group, n)
        if n % 2:
            raise ValueError(f"{kind} tables need an even symmetric-group degree")
        ind_mod, irr_mod = embedding.modified_tables(n // 2)
        table = ind_mod if kind == "modified-induced" else irr_mod
        return document_from_character_table(table, group, n, kind)
    if kind == "induced":
        return document_from_character_table(
            hyperoct.hob_induced_table(n), group, n, kind
        )
    if kind == "irreducible":
        return document_from_character_table(
            hyperoct.hob_irreducible_table(n)[0], group, n, kind
        )
    if kind == "transition":
        return document_from_transition(hyperoct.hob_irreducible_table(n)[1], group, n)
    raise ValueError(f"{kind!r} applies only to --group sym")


def cmd_table(args) -> int:
    cap = SYM_DEFAULT_CAP if args.group == "sym" else HOB_DEFAULT_CAP
    _check_cap(args.n, cap, "n", args.allow_slow)
    cache = _cache_from(args)
    doc = cache.lookup(args.group, args.n, args.kind) if cache else None
    if doc is None:
        doc = _compute_table_document(args.group, args.n, args.kind)
        if cache:
            cache.store(doc)
    _emit(args, render(doc, args.format))
    return 0


def cmd_branch(args) -> int:
    _check_cap(args.n, HOB_DEFAULT_CAP, "n", args.allow_slow)
    if args.kind == "irreducible":
        matrix = reduction.reduce_irreducible(args.n)
    else:
        matrix = reduction.reduce_induced(args.n)
    _emit(args, render(document_from_branching(matrix, args.n), args.format))
    return 0


def cmd_fchar(args) -> int:
    _check_cap(args.n, HOB_DEFAULT_CAP, "n", args.allow_slow)
    cache = _cache_from(args)
    doc = cache.lookup("sym", 2 * args.n, "fchar") if cache else None
    if doc is None:
        values = embedding.permutation_character_F(args.n)
        classes = symmetric.sym_classes(2 * args.n)
        from hobchar.serialize import TableDocument

        doc = TableDocument(
            group="sym",
            n=2 * args.n,
            kind="fchar",
            row_labels=("F",),
            col_labels=tuple(ct.label for ct, _ in classes),
            col_class_orders=tuple(order for _, order in classes),
            entries=(values,),
        )
        if cache:
            cache.store(doc)
    _emit(args, render(doc, args.format))
    return 0


def _orthogonality_reports(n) -> list[CheckReport]:
    out = []
    for check, table in (
        ("orthogonality-sym", symmetric.sym_irreducible_table(2 * n)[0]),
        ("orthogonality-hyperoct", hyperoct.hob_irreducible_table(n)[0]),
    ):
        fail = first_orthogonality_failure(table)
        kind = "row"
        if fail is None:
            fail = first_column_orthogonality_failure(table)
            kind = "column"
        if fail is None:
            out.append(CheckReport(check=check, n=n, passed=True))
        else:
            i, j, got = fail
            out.append(
                CheckReport(
                    check=check,
                    n=n,
                    passed=False,
                    first_mismatch={
                        "row_label": f"{kind} {i}",
                        "col_label": f"{kind} {j}",
                        "lhs": str(got),
                        "rhs": "orthogonality value",
                    },
                )
            )
    return out


def cmd_verify(args) -> int:
    if args.n is None and args.max_n is None:
        raise ValueError("verify needs --n and/or --max-n")
    lo = args.n if args.n is not None else 1
    hi = args.max_n if args.max_n is not None else lo
    if lo < 1 or hi < lo:
        raise ValueError(f"bad verification range {lo}..{hi}")
    oracle_cap = ORACLE_HARD_CAP if args.allow_slow else ORACLE_DEFAULT_CAP
    _check_cap(hi, HOB_DEFAULT_CAP, "n", args.allow_slow)
    if args.check == "oracle" and hi > oracle_cap:
        raise ValueError(
            f"brute-force checks are capped at rank {oracle_cap}"
            + ("" if args.allow_slow else " (see --allow-slow)")
        )

    reports: list[CheckReport] = []
    for n in range(lo, hi + 1):
        if args.check in ("eq8", "all"):
            reports.append(reduction.verify_consistency(n))
        if args.check in ("method-b", "all"):
            reports.append(chains.method_b_verify(n))
        if args.check in ("orthogonality", "all"):
            reports.extend(_orthogonality_reports(n))
        if args.check in ("oracle", "all"):
            if n <= oracle_cap:
                reports.append(oracle.oracle_agreement(n))
            elif not args.quiet:
                print(
                    f"note: skipping brute-force check at rank {n} (cap {oracle_cap})",
                    file=sys.stderr,
                )

    if args.format == "json":
        payload = {"schema_version": 1, "reports": [r.to_dict() for r in reports]}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        lines = ["check,n,pass"] + [
            f"{r.check},{r.n},{str(r.passed).lower()}" for r in reports
        ]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "latex":
        lines = [r"\begin{tabular}{rrl}", r"check & n & result \\", r"\hline"]
        lines += [
            f"{r.check} & {r.n} & {'pass' if r.passed else 'FAIL'} \\\\" for r in reports
        ]
        lines.append(r"\end{tabular}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, "\n".join(r.line() for r in reports) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    with warnings.catch_warnings():
        if args.quiet:
            warnings.simplefilter("ignore", CacheWarning)
        try:
            return args.func(args)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
