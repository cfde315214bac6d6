"""Command-line front end.

Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 internal
invariant violation.  Big integers are always printed as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import characters, enumeration, partitions, symfunc, verify, weyl_dims

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Output:
    plain: str
    data: Any
    rows: list[list[Any]] = field(default_factory=list)
    header: list[str] = field(default_factory=list)
    failed: bool = False

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        return self.plain


def _scalar(name: str, value: int, **context) -> Output:
    data = {name: str(value), **{k: _jsonable(v) for k, v in context.items()}}
    return Output(str(value), data, [[str(value)]], [name])


def _jsonable(v):
    if isinstance(v, (partitions.Partition, tuple, list)):
        return [int(x) for x in v]
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_arg(text: str) -> partitions.Partition:
    try:
        return partitions.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}")


def _eta_arg(text: str) -> partitions.ExtremalIndex:
    try:
        return partitions.parse_eta(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _bounded_int(low: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}, got {value}")
        return value

    return parse


positive = _bounded_int(1)
nonnegative = _bounded_int(0)


def _check_parts(xi: partitions.Partition, r: int):
    if len(xi) > r:
        raise UsageError(f"argument --xi: {xi} has more than --rank {r} parts")


def cmd_dim(args) -> Output:
    xi, r, k = args.xi, args.rank, args.level
    _check_parts(xi, r)
    eta = partitions.eta_of_xi(xi, r)
    if args.method == "det":
        value = weyl_dims.hodge_det_dim(eta, k)
    elif args.method == "enum":
        value = enumeration.count_basis_matrices(eta, k)
    else:
        if len(xi) > 1:
            raise UsageError(f"argument --method: 'product' needs a one-row --xi, got {xi}")
        value = weyl_dims.product_dim_rect(xi.size, r, k)
    return _scalar("dimension", value, xi=xi, rank=r, level=k, method=args.method)


def cmd_eta(args) -> Output:
    _check_parts(args.xi, args.rank)
    eta = partitions.eta_of_xi(args.xi, args.rank)
    return Output(str(eta), {"eta": list(eta)}, [[e] for e in eta], ["eta"])


def cmd_shape(args) -> Output:
    lam = partitions.lambda_of_eta(args.eta)
    return Output(str(lam), {"shape": list(lam)}, [[p] for p in lam], ["part"])


def cmd_pp(args) -> Output:
    shape, k = args.shape, args.bound
    if not args.list:
        return _scalar("count", enumeration.count_plane_partitions(shape, k), shape=shape, bound=k)
    fillings = [pp.to_json() for pp in enumeration.enumerate_plane_partitions(shape, k)]
    plain = "\n".join(" / ".join(" ".join(map(str, row)) for row in f) for f in fillings)
    rows = [[i, json.dumps(f)] for i, f in enumerate(fillings)]
    data = {"shape": list(shape), "bound": k, "count": str(len(fillings)), "plane_partitions": fillings}
    return Output(plain, data, rows, ["index", "rows"])


def _expansion_output(exp: symfunc.SchurExpansion, extra: dict) -> Output:
    plain = " + ".join(f"{c}*s({nu})" if c != 1 else f"s({nu})" for nu, c in exp.items()) or "0"
    rows = [[str(nu), str(c)] for nu, c in exp.items()]
    return Output(plain, {**extra, "schur": symfunc.expansion_to_json(exp)}, rows, ["partition", "multiplicity"])


def _poly_rows(poly: symfunc.SymPolynomial, degree=None) -> list[list[str]]:
    prefix = [] if degree is None else [str(degree)]
    return [prefix + [" ".join(map(str, e)), str(c)] for e, c in poly.terms()]


def cmd_char(args) -> Output:
    xi, r, k = args.xi, args.rank, args.level
    _check_parts(xi, r)
    ctx = {"xi": list(xi), "rank": r, "level": k}
    if args.graded:
        g = characters.graded_char(xi, r, k, grading=args.grading)
        if args.schur:
            pieces = {d: symfunc.expand_in_schur(p) for d, p in g.pieces.items()}
            plain = "\n".join(f"t^{d}: " + _expansion_output(e, {}).plain for d, e in pieces.items())
            data = {**ctx, "grading": args.grading,
                    "pieces": [{"t_degree": d, "schur": symfunc.expansion_to_json(e)} for d, e in pieces.items()]}
            rows = [[str(d), str(nu), str(c)] for d, e in pieces.items() for nu, c in e.items()]
            return Output(plain, data, rows, ["t_degree", "partition", "multiplicity"])
        plain = "\n".join(f"t^{d}: {p}" for d, p in g.pieces.items())
        rows = [row for d, p in g.pieces.items() for row in _poly_rows(p, d)]
        return Output(plain, {**ctx, "grading": args.grading, "graded_character": g.to_json()},
                      rows, ["t_degree", "exponents", "coefficient"])
    if args.schur:
        return _expansion_output(characters.decompose_module(xi, r, k), ctx)
    poly = characters.char_matrix_model(xi, r, k)
    return Output(str(poly), {**ctx, "character": poly.to_json()}, _poly_rows(poly), ["exponents", "coefficient"])


def cmd_chains(args) -> Output:
    chains = partitions.enumerate_chains(args.xi, args.level)
    plain = "\n".join(" <= ".join(str(lam) if lam else "()" for lam in c.steps) for c in chains)
    data = {"xi": list(args.xi), "level": args.level, "chains": [c.to_json() for c in chains]}
    rows = [[i, " ".join(str(lam) for lam in c.steps)] for i, c in enumerate(chains)]
    return Output(plain, data, rows, ["index", "steps"])


def cmd_catalan(args) -> Output:
    return _scalar("catalan", weyl_dims.higher_catalan(args.n, args.rank), n=args.n, rank=args.rank)


def cmd_trapezoid(args) -> Output:
    value = weyl_dims.product_dim_trapezoid(args.n, args.p, args.rank, args.level)
    return _scalar("dimension", value, n=args.n, p=args.p, rank=args.rank, level=args.level)


def cmd_cpf(args) -> Output:
    return _scalar("dimension", characters.cpf_dim(args.xi, args.level), xi=args.xi, level=args.level)


def cmd_demazure(args) -> Output:
    try:
        weights = weyl_dims.FundamentalWeightVector(args.weights, args.rank)
    except ValueError as exc:
        raise UsageError(f"argument --weights: {exc}")
    value = weyl_dims.demazure_dim_gl(weights, args.level)
    return _scalar("dimension", value, weights=list(args.weights), rank=args.rank, level=args.level)


def cmd_verify(args) -> Output:
    cfg = verify.VerifyConfig()
    for flag, attr in (("max_size", "max_size"), ("max_rank", "max_rank"), ("max_level", "max_level")):
        value = getattr(args, flag)
        if value is not None:
            setattr(cfg, attr, value)
    cfg.char_max_level = min(cfg.char_max_level, cfg.max_level)
    report = print if args.format == "plain" else None
    results = verify.run_all(cfg, report=report)
    ok = all(r.passed for r in results)
    summary = f"{sum(r.passed for r in results)}/{len(results)} checks passed"
    data = {"passed": ok, "checks": [
        {"name": r.name, "passed": r.passed, "cases": r.cases, "seconds": round(r.seconds, 3), "failures": r.failures}
        for r in results]}
    rows = [[r.name, "PASS" if r.passed else "FAIL", r.cases] for r in results]
    return Output(summary, data, rows, ["check", "status", "cases"], failed=not ok)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    parser = _Parser(prog="higherweyl", description="Dimensions, characters and bases of level-k Schubert modules for gl_r.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", parents=[common], help="dimension of V_xi^[k]")
    p.add_argument("--xi", type=_partition_arg, required=True)
    p.add_argument("--rank", type=positive, required=True)
    p.add_argument("--level", type=positive, required=True)
    p.add_argument("--method", choices=["det", "product", "enum"], default="det")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("eta", parents=[common], help="extremal index set of xi")
    p.add_argument("--xi", type=_partition_arg, required=True)
    p.add_argument("--rank", type=positive, required=True)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("shape", parents=[common], help="plane partition shape of an index set")
    p.add_argument("--eta", type=_eta_arg, required=True)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("pp", parents=[common], help="bounded plane partitions of a shape")
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--bound", type=nonnegative, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_pp)

    p = sub.add_parser("char", parents=[common], help="gl_r character of V_xi^[k]")
    p.add_argument("--xi", type=_partition_arg, required=True)
    p.add_argument("--rank", type=positive, required=True)
    p.add_argument("--level", type=positive, required=True)
    p.add_argument("--graded", action="store_true")
    p.add_argument("--grading", choices=["t", "chain"], default="t")
    p.add_argument("--schur", action="store_true")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("chains", parents=[common], help="admissible partition chains")
    p.add_argument("--xi", type=_partition_arg, required=True)
    p.add_argument("--level", type=positive, required=True)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("catalan", parents=[common], help="higher Catalan number")
    p.add_argument("--n", type=nonnegative, required=True)
    p.add_argument("--rank", type=positive, required=True)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("trapezoid", parents=[common], help="plane partitions of a trapezoidal shape")
    p.add_argument("--n", type=nonnegative, required=True)
    p.add_argument("--p", type=nonnegative, required=True)
    p.add_argument("--rank", type=positive, required=True)
    p.add_argument("--level", type=positive, required=True)
    p.set_defaults(func=cmd_trapezoid)

    p = sub.add_parser("cpf", parents=[common], help="dimension of the higher parking function representation")
    p.add_argument("--xi", type=_partition_arg, required=True)
    p.add_argument("--level", type=positive, required=True)
    p.set_defaults(func=cmd_cpf)

    p = sub.add_parser("demazure", parents=[common], help="Demazure module dimension for gl_r")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--rank", type=_bounded_int(2), required=True)
    p.add_argument("--level", type=positive, required=True)
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--max-size", type=positive, default=None)
    p.add_argument("--max-rank", type=_bounded_int(2), default=None)
    p.add_argument("--max-level", type=positive, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "xi", None) is not None and args.xi.size == 0 and args.command in ("chains", "cpf"):
            raise UsageError("argument --xi: must be a nonempty partition")
        out = args.func(args)
    except UsageError as exc:
        print(f"higherweyl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (weyl_dims.NonIntegralError, weyl_dims.FormulaMismatch, AssertionError) as exc:
        print(f"higherweyl: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"higherweyl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out.render(args.format))
    return EXIT_VERIFY if out.failed else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
