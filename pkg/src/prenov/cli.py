"""Command-line front end.

Exit codes: 0 all checks passed, 1 mathematical mismatch, 2 usage or
parse error.  All output is deterministic: fixed seeds (echoed when used),
canonical basis orders, no timestamps.
"""

import argparse
import json
import sys
from importlib import resources

from . import operads
from .dendriform import rename_to_prenov, split, split_all
from .envelope import (
    MaxOrderExceeded,
    StructureAlgebra,
    build_rules,
    composition_check,
    verify_embedding,
)
from .identities import pre_novikov_system
from .sexpr import ParseError, evaluate_source, parse_term
from .speciality import DEFAULT_MOD_PRIMES, GoldenMatrixMismatch, run_counterexample
from .terms import SIG_MUL

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

BUNDLED_STRUCTURES = ("dim1", "dim2", "dim3")


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_dims(args) -> int:
    if args.max_arity > 6:
        raise ParseError("--max-arity is capped at 6")
    rows = []
    ok = True
    for n in range(1, args.max_arity + 1):
        closed = operads.CLOSED_DIMS[args.variety](n)
        enumerated = operads.enumerated_dim(args.variety, n)
        rows.append({"arity": n, "closed_form": closed, "enumerated": enumerated})
        ok = ok and closed == enumerated
    payload = {"variety": args.variety, "dims": rows, "match": ok}
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        lines = ["arity,closed_form,enumerated"]
        lines += [f"{r['arity']},{r['closed_form']},{r['enumerated']}" for r in rows]
        _emit("\n".join(lines))
    else:
        _emit(f"variety: {args.variety}")
        _emit(f"{'arity':>5} {'closed':>8} {'enumerated':>11}")
        for r in rows:
            _emit(f"{r['arity']:>5} {r['closed_form']:>8} {r['enumerated']:>11}")
        _emit(f"match: {ok}")
    if args.figure:
        from .plots import save_dims_figure

        table = {
            f"{args.variety} closed": {r["arity"]: r["closed_form"] for r in rows},
            f"{args.variety} enumerated": {r["arity"]: r["enumerated"] for r in rows},
        }
        save_dims_figure(table, args.figure)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_relations(args) -> int:
    result = operads.eval_matrix(args.variety, args.arity)
    rank = result.matrix.rank()
    kernel = operads.relation_kernel(args.variety, args.arity, result)
    report = operads.white_vs_hadamard(args.variety, args.arity, result)
    checks = {}
    if args.variety == "zinb" and args.arity == 3:
        checks["contains_pre_novikov_identities"] = all(
            operads.verify_identity(i, "zinb") for i in pre_novikov_system()
        )
    payload = {
        "variety": args.variety,
        "arity": args.arity,
        "monomials": len(result.monomials),
        "rank": rank,
        "kernel_dim": len(kernel),
        "white_dim": report["white_dim"],
        "hadamard_dim": report["hadamard_dim"],
        "white_equals_hadamard": report["equal"],
        **checks,
        "monomial_list": [str(m) for m in result.monomials],
        "basis": [str(b) for b in result.basis],
        "matrix": result.matrix.to_json_obj(),
        "kernel_basis": [str(k) for k in kernel],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        _emit(f"variety: {args.variety}  arity: {args.arity}")
        _emit(f"monomials: {payload['monomials']}")
        _emit(f"rank (white product dim): {rank}")
        _emit(f"kernel dim: {payload['kernel_dim']}")
        _emit(f"hadamard dim: {payload['hadamard_dim']}  equal: {report['equal']}")
        for key, val in checks.items():
            _emit(f"{key}: {val}")
        _emit("kernel basis:")
        for k in kernel:
            _emit(f"  {k}")
    if args.figure:
        from .plots import save_relations_figure

        save_relations_figure(result, rank, len(kernel), args.figure)
    return EXIT_OK


def cmd_split(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    outputs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            f = parse_term(line, SIG_MUL)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if args.k == "all":
            parts = split_all(f)
            ks = list(range(1, len(parts) + 1))
        else:
            k = int(args.k)
            parts = [split(f, k)]
            ks = [k]
        for k, g in zip(ks, parts):
            if args.rename:
                g = rename_to_prenov(g)
            outputs.append({"input": line, "k": k, "split": str(g), "pretty": g.pretty()})
    if args.format == "json":
        _emit(json.dumps(outputs, indent=2, ensure_ascii=False))
    else:
        for out in outputs:
            _emit(f"{out['input']}  [k={out['k']}]")
            _emit(f"  {out['pretty']}")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    primes = tuple(int(p) for p in args.mod_primes.split(",")) if args.mod_primes else DEFAULT_MOD_PRIMES
    try:
        report = run_counterexample(mod_primes=primes)
    except GoldenMatrixMismatch as exc:
        sys.stderr.write(f"counterexample matrix mismatch:\n{exc}\n")
        return EXIT_MISMATCH
    if args.format == "json":
        _emit(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(report.matrix.to_csv())
    else:
        _emit(report.transcript())
    if args.figure:
        from .plots import save_matrix_figure

        save_matrix_figure(
            report.matrix,
            [str(w) for w in report.columns],
            [label for label, _ in report.expansions],
            args.figure,
            title=f"rank {report.rank}, with e1 row {report.augmented_rank}",
        )
    ok = (
        report.rank == 10
        and report.augmented_rank == 11
        and not report.special
    )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_normalize(args) -> int:
    engine = operads.engine_for(args.variety)
    value = evaluate_source(args.input, engine)
    if args.format == "json":
        _emit(json.dumps({"variety": args.variety, "input": args.input, "normal_form": str(value)}, ensure_ascii=False, indent=2))
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_envelope(args) -> int:
    if args.structure in BUNDLED_STRUCTURES:
        text = resources.files("prenov.data").joinpath(f"envelope_{args.structure}.json").read_text()
    else:
        with open(args.structure, encoding="utf-8") as fh:
            text = fh.read()
    try:
        alg = StructureAlgebra.from_json(text)
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad structure file: {exc}") from exc
    rules = build_rules(alg, args.max_order)
    compositions = composition_check(rules)
    bad_leads = rules.check_leading_words()
    try:
        embedded = verify_embedding(alg, args.trials, args.max_order, seed=args.seed)
    except MaxOrderExceeded as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_MISMATCH
    payload = {
        "basis": alg.basis,
        "max_order": args.max_order,
        "rules": len(rules.rules),
        "compositions": [
            {"kind": kind, "left": str(w1), "right": str(w2)}
            for kind, w1, w2, _ in compositions
        ],
        "leading_words_verified": not bad_leads,
        "trials": args.trials,
        "seed": args.seed,
        "embedding_verified": embedded,
    }
    ok = not compositions and not bad_leads and embedded
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(f"basis: {' '.join(alg.basis)}   rules: {payload['rules']} (order <= {args.max_order})")
        _emit(f"compositions of inclusion or intersection: {len(compositions)}")
        _emit(f"leading words verified: {payload['leading_words_verified']}")
        _emit(f"embedding verified on {args.trials} random pairs (seed {args.seed}): {embedded}")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prenov",
        description="Exact computations in free differential Zinbiel, commutative and Novikov algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="closed-form vs enumerated multilinear dimensions")
    p.add_argument("--variety", choices=operads.VARIETIES, required=True)
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.add_argument("--figure", help="also render a chart to this file")
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("relations", help="derived-variety relations at one arity")
    p.add_argument("--variety", choices=operads.VARIETIES, required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.add_argument("--figure", help="also render the matrix sparsity chart to this file")
    p.set_defaults(fn=cmd_relations)

    p = sub.add_parser("split", help="dendriform splitting of multilinear identities")
    p.add_argument("--input", default="-", help="file of identities, one per line ('-' = stdin)")
    p.add_argument("--k", default="all", help="variable index to mark, or 'all'")
    p.add_argument("--rename", action="store_true", help="rename the result to the ≺/≻ operations")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(fn=cmd_split)

    p = sub.add_parser("counterexample", help="the non-special derived Zinbiel algebra, end to end")
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.add_argument("--mod-primes", default=None, help="comma-separated primes for modular ranks")
    p.add_argument("--figure", help="also render the matrix heatmap to this file")
    p.set_defaults(fn=cmd_counterexample)

    p = sub.add_parser("normalize", help="normal form of a term in a chosen free algebra")
    p.add_argument("--variety", choices=operads.VARIETIES, required=True)
    p.add_argument("--input", required=True, help="term source text")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("envelope", help="differential associative envelope of a structure algebra")
    p.add_argument("--structure", required=True, help=f"JSON file or one of {BUNDLED_STRUCTURES}")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--seed", type=int, default=20240228)
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(fn=cmd_envelope)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
