"""Command-line front end; every subcommand prints JSON on stdout.

Exit codes: 0 on success, 1 when a verification subcommand found a
counterexample (or the methods disagreed), 2 for usage errors.  All
randomized subcommands take a seed and default to DEFAULT_SEED, so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import kostant, lr3, steinberg, stretch, typea
from .hive import build_system

DEFAULT_SEED = lr3.DEFAULT_SEED

_JSON_INT_LIMIT = 2**53  # larger integers go out as decimal strings


def _json_int(x: int):
    return x if abs(x) < _JSON_INT_LIMIT else str(x)


def _parse_partition_arg(text: str):
    try:
        return typea.parse_partition(text)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(payload: dict, path) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _triple_meta(lam, mu, nu) -> dict:
    return {
        "lambda": typea.format_partition(lam),
        "mu": typea.format_partition(mu),
        "nu": typea.format_partition(nu),
    }


def _cmd_lr(args) -> int:
    lam = _parse_partition_arg(args.lam)
    mu = _parse_partition_arg(args.mu)
    nu = _parse_partition_arg(args.nu)
    meta = _triple_meta(lam, mu, nu)
    if sum(lam) + sum(mu) != sum(nu):
        payload = dict(meta)
        payload["coefficient"] = 0
        payload["reason"] = "sum mismatch"
        _emit(payload, args.output)
        return 0
    k = max(
        typea.partition_length(lam),
        typea.partition_length(mu),
        typea.partition_length(nu),
        1,
    )
    if args.method == "all":
        payload = dict(meta)
        values = {}
        for m in stretch.COUNTING_METHODS:
            values[m] = stretch.count_by(m, lam, mu, nu, k)
        payload.update({m: _json_int(v) for m, v in values.items()})
        agree = len(set(values.values())) == 1
        payload["agree"] = agree
        _emit(payload, args.output)
        return 0 if agree else 1
    payload = dict(meta)
    payload["method"] = args.method
    payload["coefficient"] = _json_int(
        stretch.count_by(args.method, lam, mu, nu, k)
    )
    _emit(payload, args.output)
    return 0


def _cmd_stretch(args) -> int:
    lam = _parse_partition_arg(args.lam)
    mu = _parse_partition_arg(args.mu)
    nu = _parse_partition_arg(args.nu)
    if sum(lam) + sum(mu) != sum(nu):
        return _usage_error("stretch requires |lambda| + |mu| = |nu|")
    result = stretch.stretch_poly(lam, mu, nu, args.method)
    payload = _triple_meta(lam, mu, nu)
    payload["method"] = args.method
    payload.update(result.to_json_dict())
    _emit(payload, args.output)
    return 0


def _cmd_kostant(args) -> int:
    try:
        coords = [Fraction(x) for x in args.weight.split(",")]
    except ValueError:
        return _usage_error(f"bad weight: {args.weight!r}")
    if len(coords) != args.k:
        return _usage_error("weight length must equal k")
    if sum(coords) != 0:
        return _usage_error("weight must have coordinate sum 0")
    count = kostant.kostant_count(args.k, coords)
    payload = {
        "k": args.k,
        "weight": [str(x) for x in coords],
        "count": _json_int(count),
    }
    _emit(payload, args.output)
    return 0


def _cmd_chambers(args) -> int:
    if args.n not in (1, 2, 3):
        return _usage_error("chambers supported for n in {1, 2, 3}")
    chambers = kostant.kostant_chambers(args.n)
    names = [f"v{i+1}" for i in range(args.n)]
    payload = {
        "n": args.n,
        "variables": names,
        "regions": [
            {
                "generators": [list(r) for r in ch.generators],
                "polynomial": _poly_terms(ch.polynomial, names),
                "display": ch.polynomial.format(names),
            }
            for ch in chambers
        ],
    }
    _emit(payload, args.output)
    return 0


def _poly_terms(poly, names) -> dict:
    out = {}
    for e, c in poly.terms:
        factors = []
        for name, p in zip(names, e):
            factors.extend([name] * p)
        out["*".join(factors) if factors else "1"] = str(c)
    return out


def _cmd_matrix(args) -> int:
    if args.k < 2:
        return _usage_error("matrix requires k >= 2")
    system = build_system(args.k)
    payload = {
        "k": system.k,
        "inequality_order": list(system.inequality_order),
        "E": system.E.int_rows(),
        "B": system.B.int_rows(),
    }
    _emit(payload, args.output)
    return 0


def _cmd_verify_k3(args) -> int:
    cones, _ = lr3.load_k3()
    rows = []
    all_pass = True
    for cone in cones:
        v = lr3.verify_cone(
            cone, samples=args.samples, seed=args.seed, check_steinberg=False
        )
        row = {
            "cone": v.cone,
            "points": v.points_checked,
            "pass": v.passed,
        }
        if not v.passed:
            all_pass = False
            row["counterexamples"] = [
                {
                    "point": list(p),
                    "polynomial": str(val),
                    "count": _json_int(cnt),
                }
                for p, val, cnt in v.counterexamples
            ]
        rows.append(row)
    payload = {
        "samples": args.samples,
        "seed": args.seed,
        "cones": rows,
        "all_pass": all_pass,
    }
    _emit(payload, args.output)
    return 0 if all_pass else 1


def _cmd_generic(args) -> int:
    lam = _parse_partition_arg(args.lam)
    mu = _parse_partition_arg(args.mu)
    nu = _parse_partition_arg(args.nu)
    k = max(
        typea.partition_length(lam),
        typea.partition_length(mu),
        typea.partition_length(nu),
        2,
    )
    payload = _triple_meta(lam, mu, nu)
    payload["k"] = k
    if steinberg.is_generic(lam, mu, nu, k):
        sig = steinberg.type_signature(lam, mu, nu, k)
        digest = hashlib.sha256(sig.digest().encode()).hexdigest()
        payload["generic"] = True
        payload["signature_entries"] = len(sig.signs)
        payload["signature_sha256"] = digest
    else:
        payload["generic"] = False
    _emit(payload, args.output)
    return 0


def _cmd_ktt(args) -> int:
    lam = _parse_partition_arg(args.lam)
    mu = _parse_partition_arg(args.mu)
    nu = _parse_partition_arg(args.nu)
    if sum(lam) + sum(mu) != sum(nu):
        return _usage_error("ktt requires |lambda| + |mu| = |nu|")
    try:
        report = stretch.check_ktt(lam, mu, nu, args.method)
    except ValueError as exc:
        return _usage_error(str(exc))
    payload = _triple_meta(lam, mu, nu)
    payload.update(report.to_json_dict())
    _emit(payload, args.output)
    return 0


def _add_triple(parser) -> None:
    parser.add_argument("lam", metavar="lambda", help="e.g. 2,1,0")
    parser.add_argument("mu", help="e.g. 2,1,0")
    parser.add_argument("nu", help="e.g. 3,2,1")


def _add_method(parser, with_all: bool) -> None:
    choices = list(stretch.COUNTING_METHODS) + (["all"] if with_all else [])
    parser.add_argument("--method", choices=choices, default="hive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrpoly",
        description="Exact Littlewood-Richardson coefficients, "
        "stretching polynomials, and chamber data.",
    )
    parser.add_argument(
        "-o", "--output", default=None, help="write JSON to a file"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="one coefficient, any or all methods")
    _add_triple(p)
    _add_method(p, with_all=True)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("stretch", help="stretching polynomial in N")
    _add_triple(p)
    _add_method(p, with_all=False)
    p.set_defaults(func=_cmd_stretch)

    p = sub.add_parser("kostant", help="Kostant partition count")
    p.add_argument("k", type=int)
    p.add_argument("weight", help="comma-separated, sum 0, e.g. 1,0,-1")
    p.set_defaults(func=_cmd_kostant)

    p = sub.add_parser("chambers", help="Kostant chamber decomposition")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("matrix", help="hive system matrices E and B")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("verify-k3", help="check the 18-cone table")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify_k3)

    p = sub.add_parser("generic", help="genericity and type signature")
    _add_triple(p)
    p.set_defaults(func=_cmd_generic)

    p = sub.add_parser("ktt", help="stretching conjecture report")
    _add_triple(p)
    _add_method(p, with_all=False)
    p.set_defaults(func=_cmd_ktt)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except ValueError as exc:
        return _usage_error(str(exc))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
