"""Command-line front end: ``bidend VERB ...``.

Exit status: 0 on success, 1 when a verification fails, 2 when the command
line or an expression does not parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import fqsym, hck, halfprod, iso, pairing, prim, series, tensoraxioms
from .core import LinComb, LinCombSyntaxError, parse_lincomb
from .golden import origins, run_all
from .pforest import DecorationSet, ForestSyntaxError, UnknownDecorationError, enumerate_forests, parse_forest


class UsageError(Exception):
    """Bad input detected after argparse accepted the command line."""


PARSE_ERRORS = (ForestSyntaxError, UnknownDecorationError, LinCombSyntaxError, UsageError)


# ---------------------------------------------------------------- helpers

def _decorations(args) -> DecorationSet | None:
    return DecorationSet.parse(args.decorations) if args.decorations else None


def _forest_parser(args) -> Callable[[str], Any]:
    decs = _decorations(args)
    return lambda s: parse_forest(s, decs)


def _perm(text: str) -> fqsym.Perm:
    try:
        return fqsym.parse_perm(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _expr(text: str, parse_key: Callable[[str], Any]) -> LinComb:
    return parse_lincomb(text, parse_key)


def _emit(args, text: str, data: Any = None) -> None:
    if args.format == "json":
        print(json.dumps(data if data is not None else text, indent=2, sort_keys=False))
    else:
        print(text)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _series_text(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


# ------------------------------------------------------------------ verbs

def cmd_hck(args) -> int:
    parse = _forest_parser(args)
    xs = [_expr(e, parse) for e in args.exprs]
    unary = {"cop": hck.delta_full, "copl": hck.delta_pre, "copr": hck.delta_suc,
             "coplprime": hck.delta_pre_prime, "coprprime": hck.delta_suc_prime,
             "antipode": hck.antipode}
    if args.op == "mul":
        out = xs[0]
        for x in xs[1:]:
            out = hck.concat(out, x)
    else:
        if len(xs) != 1:
            raise UsageError(f"hck {args.op} takes one expression")
        out = unary[args.op](xs[0])
    _emit(args, str(out))
    return 0


def cmd_fqsym(args) -> int:
    xs = [_expr(e, _perm) for e in args.exprs]
    binary = {"mul": fqsym.product, "preml": fqsym.prec, "premr": fqsym.succ}
    unary = {"cop": fqsym.coproduct, "copl": fqsym.delta_pre, "copr": fqsym.delta_suc}
    if args.op in binary:
        if len(xs) != 2:
            raise UsageError(f"fqsym {args.op} takes two expressions")
        out = binary[args.op](*xs)
    else:
        if len(xs) != 1:
            raise UsageError(f"fqsym {args.op} takes one expression")
        out = unary[args.op](xs[0])
    _emit(args, str(out))
    return 0


def cmd_pair(args) -> int:
    if args.items == ["table"]:
        if args.weight is None:
            raise UsageError("pair table needs --weight N")
        decs = _decorations(args) or DecorationSet.single()
        forests = enumerate_forests(decs, args.weight)
        rows = pairing.table(forests)
        if args.format == "json":
            _emit(args, "", {"forests": [str(f) for f in forests], "matrix": rows})
        else:
            sys.stdout.write(pairing.format_table(forests, rows))
        return 0
    if len(args.items) != 2:
        raise UsageError("pair takes two forests, or 'table --weight N'")
    parse = _forest_parser(args)
    f, g = (parse(s) for s in args.items)
    values = {}
    if args.oracle in ("recursive", "both"):
        values["recursive"] = pairing.pair(f, g)
    if args.oracle in ("bijection", "both"):
        values["bijection"] = pairing.pair_oracle(f, g)
    distinct = set(values.values())
    if len(distinct) > 1:
        print(f"pairing algorithms disagree: {values}", file=sys.stderr)
        return 1
    _emit(args, str(distinct.pop()), values)
    return 0


def cmd_halfprod(args) -> int:
    decs = _decorations(args) or DecorationSet.single()
    if args.op == "table":
        table = halfprod.build_table(decs, args.max)
        if args.format == "json":
            _emit(args, "", [{"left": str(f), "right": str(g), "prec": str(p), "succ": str(s)}
                             for f, g, p, s in table.entries()])
        else:
            sys.stdout.write(halfprod.format_table(table))
        return 0
    if len(args.forests) != 2:
        raise UsageError(f"halfprod {args.op} takes two forests")
    f, g = (parse_forest(s, decs) for s in args.forests)
    bound = max(args.max or 0, f.degree + g.degree, halfprod.DEFAULT_MAX_DEGREE)
    table = halfprod.shared_table(tuple(decs), bound)
    out = table.prec(f, g) if args.op == "preml" else table.succ(f, g)
    _emit(args, str(out))
    return 0


def _algebra(args) -> prim.BidendAlgebraHandle:
    if args.algebra == "fqsym":
        return prim.fqsym_handle()
    return prim.hck_handle(_decorations(args), max(args.max_degree or 0, halfprod.DEFAULT_MAX_DEGREE))


def cmd_prim(args) -> int:
    A = _algebra(args)
    if args.op == "dims":
        d = prim.dims(A, args.max)
        _emit(args, _series_text(d), d)
        return 0
    if args.degree is None:
        raise UsageError("prim basis needs --degree N")
    vecs = prim.prim_tot_basis(A, args.degree).vectors
    _emit(args, "\n".join(str(v) for v in vecs) if vecs else "(empty)", [str(v) for v in vecs])
    return 0


def cmd_series(args) -> int:
    if args.op == "p-from-dims":
        if not args.dims:
            raise UsageError("series p-from-dims needs --dims")
        out = series.p_from_r(series.Series.from_dims(_ints(args.dims)))
    else:
        if not args.d:
            raise UsageError("series r-from-d needs --d")
        out = series.r_from_d(series.Series.from_dims(_ints(args.d)))
    coeffs = out.coeffs[1:]
    _emit(args, _series_text(coeffs), [str(c) for c in coeffs])
    return 0


def cmd_iso(args) -> int:
    report = iso.verify_iso(args.max)
    if args.json or args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.format())
    return 0 if report.ok else 1


def cmd_laws(args) -> int:
    seed = args.seed if args.seed is not None else 0
    report = tensoraxioms.run_suite(args.suite, args.algebra, max_degree=args.maxdeg,
                                    samples=args.samples, seed=seed,
                                    exhaustive_degree=args.exhaustive,
                                    decorations=_decorations(args))
    if args.json or args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.format())
    return 0 if report.ok else 1


def cmd_golden(args) -> int:
    if args.list:
        for name, origin in origins().items():
            print(f"{name}\t{origin}")
        return 0
    results = run_all()
    if args.format == "json":
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.file}:{r.case} {r.detail}")
    return 0 if all(r.ok for r in results) else 1


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS,
                        help="degree bound for reconstructed half-products")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "tsv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--decorations", default=argparse.SUPPRESS,
                        help="decoration set, e.g. 'a,b' or 'a:1,b:2'")

    p = argparse.ArgumentParser(prog="bidend", parents=[common],
                                description="Exact computations on planar forests and permutations.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("hck", parents=[common], help="decorated forest Hopf algebra")
    s.add_argument("op", choices=("mul", "cop", "copl", "copr", "coplprime", "coprprime", "antipode"))
    s.add_argument("exprs", nargs="+", metavar="EXPR")
    s.set_defaults(func=cmd_hck)

    s = sub.add_parser("fqsym", parents=[common], help="permutation Hopf algebra")
    s.add_argument("op", choices=("mul", "preml", "premr", "cop", "copl", "copr"))
    s.add_argument("exprs", nargs="+", metavar="EXPR")
    s.set_defaults(func=cmd_fqsym)

    s = sub.add_parser("pair", parents=[common], help="pairing of two forests, or a table")
    s.add_argument("items", nargs="+", metavar="FOREST")
    s.add_argument("--oracle", choices=("recursive", "bijection", "both"), default="recursive")
    s.add_argument("--weight", type=int)
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("halfprod", parents=[common], help="reconstructed half-products")
    s.add_argument("op", choices=("preml", "premr", "table"))
    s.add_argument("forests", nargs="*", metavar="FOREST")
    s.add_argument("--max", type=int, default=None)
    s.set_defaults(func=cmd_halfprod)

    s = sub.add_parser("prim", parents=[common], help="totally primitive elements")
    s.add_argument("op", choices=("dims", "basis"))
    s.add_argument("--algebra", choices=("fqsym", "hck"), default="fqsym")
    s.add_argument("--max", type=int, default=4)
    s.add_argument("--degree", type=int)
    s.set_defaults(func=cmd_prim)

    s = sub.add_parser("series", parents=[common], help="generating series")
    s.add_argument("op", choices=("p-from-dims", "r-from-d"))
    s.add_argument("--dims")
    s.add_argument("--d")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("iso", parents=[common], help="forest/permutation isomorphism")
    s.add_argument("op", choices=("check",))
    s.add_argument("--max", type=int, default=iso.DEFAULT_MAX)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("laws", parents=[common], help="axiom suites")
    s.add_argument("--suite", choices=sorted(tensoraxioms.SUITES), required=True)
    s.add_argument("--algebra", choices=tensoraxioms.ALGEBRAS, default="fqsym")
    s.add_argument("--maxdeg", type=int, default=6)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--exhaustive", type=int, default=4, help="exhaustive up to this total degree")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("golden", parents=[common], help="replay checked-in examples")
    s.add_argument("op", choices=("run",))
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_golden)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("max_degree", None), ("seed", None), ("format", "text"),
                          ("decorations", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except PARSE_ERRORS as exc:
        print(f"bidend: error: {exc}", file=sys.stderr)
        return 2
    except halfprod.DegreeBoundError as exc:
        print(f"bidend: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
