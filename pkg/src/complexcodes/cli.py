"""Command-line front end.

Budgets are given as power-of-two exponents (``--budget-messages 24`` means
2^24).  Every flag with an environment mirror (COMPLEXCODES_FIELD, _FORMAT,
_BUDGET_MESSAGES, _BUDGET_COLUMNS, _BUDGET_FACES, _THREADS) uses the
environment value as its default; an explicit flag always wins.

Exit codes: 0 success (including DISCREPANCY-NOTED rows), 1 input or budget
errors, 2 when reproduce-paper finds a real mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, io, reproduce
from .codes import (
    Budgets,
    OperationReport,
    grade,
    predict_boundary,
    predict_cone,
    PredictedParams,
    summarize_anticode,
    summarize_face_code,
)
from .complexes import boundary, cone, identify_vertices, skeleton, stellar_subdivide
from .errors import (
    BudgetExceededError,
    InputFormatError,
    InvalidComplexError,
    NonPrimeFieldError,
)


def _env_default(name: str, fallback):
    value = os.environ.get(f"COMPLEXCODES_{name}")
    return fallback if value is None else value


def _add_common(parser: argparse.ArgumentParser, *, field=True):
    if field:
        parser.add_argument(
            "--field",
            type=int,
            default=int(_env_default("FIELD", 2)),
            help="prime field modulus p (default 2)",
        )
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default=_env_default("FORMAT", "text"),
        help="output format",
    )
    parser.add_argument(
        "--budget-messages",
        type=int,
        metavar="B",
        default=int(_env_default("BUDGET_MESSAGES", 24)),
        help="message enumeration budget exponent: at most 2^B messages",
    )
    parser.add_argument(
        "--budget-columns",
        type=int,
        metavar="B",
        default=int(_env_default("BUDGET_COLUMNS", 24)),
        help="anticode column budget exponent: materialize only if p^k <= 2^B",
    )
    parser.add_argument(
        "--budget-faces",
        type=int,
        metavar="B",
        default=int(_env_default("BUDGET_FACES", 22)),
        help="face enumeration budget exponent",
    )
    parser.add_argument(
        "--threads",
        default=_env_default("THREADS", "1"),
        help="worker threads for message sweeps: a count, or 'auto'",
    )


def _budgets(args) -> Budgets:
    return Budgets(
        faces=1 << args.budget_faces,
        columns=1 << args.budget_columns,
        messages=1 << args.budget_messages,
    )


def _threads(args) -> int:
    if args.threads == "auto":
        return os.cpu_count() or 1
    n = int(args.threads)
    if n < 1:
        raise InputFormatError("--threads must be >= 1 or 'auto'")
    return n


def _print_summary(summary, fmt: str):
    if fmt == "json":
        print(json.dumps(summary.as_dict(), sort_keys=True))
    elif fmt == "csv":
        if summary.weight_distribution is None:
            raise InputFormatError(
                "csv output needs a weight distribution; use --method exhaustive"
            )
        print("weight,count")
        for w, c in sorted(summary.weight_distribution.items()):
            print(f"{w},{c}")
    else:
        n, k, d = summary.params
        extra = " (degenerate: no columns)" if summary.degenerate else ""
        print(f"[{n},{k},{d}] method={summary.method}{extra}")


def _cmd_params(args) -> int:
    delta, _ = io.load_complex_file(args.input)
    summary = summarize_face_code(
        delta, args.field, method=args.method, budgets=_budgets(args), threads=_threads(args)
    )
    _print_summary(summary, args.format)
    return 0


def _cmd_anticode(args) -> int:
    delta, _ = io.load_complex_file(args.input)
    summary = summarize_anticode(
        delta, args.field, method=args.method, budgets=_budgets(args), threads=_threads(args)
    )
    _print_summary(summary, args.format)
    return 0


def _apply_op(args, delta, labels):
    name = args.operation
    if name == "cone":
        if args.apex is not None and args.apex in labels:
            raise InvalidComplexError(f"apex label {args.apex} collides with an existing vertex")
        return cone(delta)
    if name == "boundary":
        return boundary(delta)
    if name == "skeleton":
        if args.dim is None:
            raise InputFormatError("op skeleton requires --dim")
        return skeleton(delta, args.dim)
    if name == "glue":
        if args.map is None:
            raise InputFormatError("op glue requires --map")
        vmap = io.load_vertex_map(args.map, labels)
        return identify_vertices(delta, vmap)
    if name == "subdivide":
        if args.facet is None:
            raise InputFormatError("op subdivide requires --facet")
        try:
            target = [int(tok) for tok in args.facet.replace(",", " ").split()]
        except ValueError as e:
            raise InputFormatError(f"--facet must list vertex labels: {e}") from e
        index = {lab: i for i, lab in enumerate(labels)}
        missing = [v for v in target if v not in index]
        if missing:
            raise InputFormatError(f"unknown facet labels {missing}")
        return stellar_subdivide(delta, [index[v] for v in target])
    raise InputFormatError(f"unknown operation {name!r}")


def _cmd_op(args) -> int:
    delta, labels = io.load_complex_file(args.input)
    budgets = _budgets(args)
    threads = _threads(args)
    before = summarize_face_code(delta, args.field, budgets=budgets, threads=threads)
    after_complex = _apply_op(args, delta, labels)
    after = summarize_face_code(after_complex, args.field, budgets=budgets, threads=threads)
    if args.operation == "cone":
        n, k, d = predict_cone(before.params)
        predicted = PredictedParams(n=n, k=k, d=d)
    elif args.operation == "boundary":
        isolated = any(f.bit_count() == 1 for f in delta.facet_masks)
        predicted = predict_boundary(
            before.params, len(delta.facet_masks), has_isolated_vertices=isolated
        )
    elif args.operation == "glue":
        predicted = PredictedParams(
            notes=("general vertex identification: no parameter transform predicted",)
        )
    else:
        predicted = PredictedParams()
    report = OperationReport(
        operation=args.operation,
        before=before,
        after=after,
        predicted_after=predicted,
        status=grade(predicted, after),
    )
    if args.format == "json":
        print(json.dumps(report.as_dict(), sort_keys=True))
    elif args.format == "csv":
        raise InputFormatError("csv output is not defined for operation reports")
    else:
        print(f"operation: {report.operation}")
        print(f"before:    [{before.n},{before.k},{before.d}] method={before.method}")
        print(f"after:     [{after.n},{after.k},{after.d}] method={after.method}")
        pd = report.predicted_after
        pieces = []
        if pd.n is not None:
            pieces.append(f"n={pd.n}")
        if pd.k is not None:
            pieces.append(f"k={pd.k}")
        if pd.d is not None:
            pieces.append(f"d={pd.d}")
        if pd.d_range is not None:
            pieces.append(f"d in [{pd.d_range[0]},{pd.d_range[1]}]")
        print(f"predicted: {' '.join(pieces) if pieces else '(none)'}")
        for note in pd.notes:
            print(f"note:      {note}")
        print(f"status:    {report.status}")
    return 0


def _cmd_family(args) -> int:
    spec = families.FamilySpec(args.name, args.index, args.field)
    report = families.evaluate_family(spec, budgets=_budgets(args), threads=_threads(args))
    if args.format == "json":
        print(json.dumps(report.as_dict(), sort_keys=True))
    elif args.format == "csv":
        raise InputFormatError("csv output is not defined for family reports")
    else:
        s = report.summary
        pred = report.instance.prediction
        print(f"family:   {args.name} N={args.index} over F_{args.field}")
        print(f"computed: [{s.n},{s.k},{s.d}] method={s.method}")
        print(f"printed:  [{pred.n},{pred.k},{pred.d}]")
        v = report.verdict
        print(f"griesmer: length {v.griesmer_length}, gap {v.gap}, {v.classification}")
        print(f"status:   {report.status}")
    return 0


def _cmd_sweep(args) -> int:
    if args.rule.startswith("files:"):
        rule = families.facet_file_rule(args.rule[len("files:") :])
    elif args.rule in families.BUILTIN_RULES:
        rule = families.BUILTIN_RULES[args.rule]()
    else:
        known = ", ".join(sorted(families.BUILTIN_RULES))
        raise InputFormatError(f"unknown rule {args.rule!r}; use one of {known} or files:PATTERN")
    if args.k_min > args.k_max:
        raise InputFormatError("--k-min must not exceed --k-max")
    result = families.asymptotic_sweep(
        rule,
        range(args.k_min, args.k_max + 1),
        args.field,
        budgets=_budgets(args),
        threads=_threads(args),
    )
    if args.format == "json":
        print(json.dumps(result.as_dict(), sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(result.to_csv())
    else:
        print(f"rule {result.rule} over F_{result.p}, target ratio {result.target_ratio:.6f}")
        print(f"{'k':>4} {'n':>10} {'d':>10} {'ratio':>10}  method")
        for r in result.rows:
            ratio = "" if r.ratio is None else f"{r.ratio:.6f}"
            print(f"{r.k:>4} {r.n:>10} {r.d:>10} {ratio:>10}  {r.method}")
        if result.truncated_at is not None:
            print(f"truncated at k={result.truncated_at}: budget exceeded")
        if result.final_deviation is not None:
            print(f"final |d/n - target| = {result.final_deviation:.6f}")
    return 0


def _cmd_reproduce(args) -> int:
    result = reproduce.run_reproduction(budgets=_budgets(args), threads=_threads(args))
    if args.format == "json":
        print(json.dumps(result.as_dict(), sort_keys=True))
    elif args.format == "csv":
        print("id,computed,printed,status,method")
        for r in result.rows:
            print(
                '{},"[{},{},{}]","[{},{},{}]",{},{}'.format(
                    r.id, *r.computed, *r.printed, r.status, r.method
                )
            )
    else:
        sys.stdout.write(reproduce.format_table(result))
    return 2 if result.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complexcodes",
        description="Linear codes from simplicial complexes: parameters, operations, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="parameters [n,k,d] of the face code of a complex")
    p.add_argument("input", help="facet-list file (JSON or text)")
    p.add_argument("--method", choices=("geometric", "exhaustive"), default="geometric")
    _add_common(p)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("anticode", help="parameters of the ambient anticode")
    p.add_argument("input", help="facet-list file (JSON or text)")
    p.add_argument("--method", choices=("auto", "exhaustive", "identity"), default="auto")
    _add_common(p)
    p.set_defaults(func=_cmd_anticode)

    p = sub.add_parser("op", help="apply a topological operation and report the transform")
    p.add_argument("operation", choices=("cone", "boundary", "skeleton", "glue", "subdivide"))
    p.add_argument("input", help="facet-list file (JSON or text)")
    p.add_argument("--apex", type=int, default=None, help="cone: label for the new apex")
    p.add_argument("--dim", type=int, default=None, help="skeleton: maximum dimension r")
    p.add_argument("--map", default=None, help="glue: vertex-map file of 'src dst' label lines")
    p.add_argument("--facet", default=None, help="subdivide: facet labels, e.g. '0,1,2'")
    _add_common(p)
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("family", help="evaluate a named family member against its prediction")
    p.add_argument("--name", required=True, choices=(families.FULL_SIMPLEX, families.SKELETON, families.CONE_SKELETON))
    p.add_argument("--index", required=True, type=int, help="family index N")
    _add_common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sweep", help="anticode d/n sweep for a bounded-dimension family")
    p.add_argument("--rule", required=True, help="fixed-triangle, disjoint-triangles, or files:PATTERN with {k}")
    p.add_argument("--k-min", required=True, type=int)
    p.add_argument("--k-max", required=True, type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("reproduce-paper", help="check bundled reference instances against printed values")
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (InputFormatError, InvalidComplexError, NonPrimeFieldError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
