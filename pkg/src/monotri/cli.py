"""Command-line front end.

Text output prints the bare result (an integer, a polynomial or a report);
``--format json`` wraps it in a single envelope object.  Exit status is 0 on
success, 1 when a cross-check or property fails, and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable

from . import brute, formulas, genfun, verify
from .errors import InvalidInputError, VerificationError
from .formulas import half
from .poly import MultiPoly

FORMAT_ENV = "MONOTRI_FORMAT"
ASM_GUARD = brute.ASM_SIZE_GUARD
SYMBOLIC_GUARD = verify.SYMBOLIC_GUARD

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


@dataclass
class Outcome:
    result: object
    method: str
    text: str
    exit_code: int = EXIT_OK
    warnings: list[str] = field(default_factory=list)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip()) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _check_guard(value: int, limit: int, args, what: str) -> None:
    if value > limit and not args.unsafe_sizes:
        raise InvalidInputError(f"{what} {value} exceeds the guard {limit}; pass --unsafe-sizes")


def _crosscheck(args, methods: dict[str, Callable[[], object]], default: str, partner: str) -> Outcome:
    if args.method not in methods:
        raise InvalidInputError(f"unknown method {args.method!r}; choose from {', '.join(methods)}")
    first = methods[args.method]()
    if not args.crosscheck:
        return Outcome(first, args.method, str(first))
    other = partner if args.method != partner else default
    second = methods[other]()
    method = f"{args.method}+{other}"
    if first != second:
        return Outcome({args.method: str(first), other: str(second)}, method,
                       f"mismatch: {args.method}={first} {other}={second}", EXIT_MISMATCH)
    return Outcome(first, method, str(first))


# subcommands


def hmt_count(args) -> Outcome:
    n, x, k = args.rows, args.max, args.bottom
    if n < 1:
        raise InvalidInputError(f"--rows must be >= 1, got {n}")
    if len(k) != half(n):
        raise InvalidInputError(f"--bottom needs {half(n)} entries for {n} rows, got {len(k)}")
    _check_guard(n, SYMBOLIC_GUARD, args, "--rows")
    strict = all(a < b for a, b in zip(k, k[1:])) and (not k or k[-1] <= x)
    if args.method == "brute" and not strict:
        raise InvalidInputError("enumeration needs a strictly increasing bottom row with entries <= --max")

    def as_int(v):
        return v.numerator if getattr(v, "denominator", 1) == 1 else v

    if args.weak:
        if args.method == "theorem1":
            args.method = "product"
        methods = {"brute": lambda: brute.count_weak_hmt_brute(n, x, k),
                   "product": lambda: as_int(formulas.beta(n, x, k))}
        return _crosscheck(args, methods, "product", "brute")
    methods = {
        "brute": lambda: brute.count_hmt_brute(n, x, k),
        "recursion": lambda: as_int(brute.gamma_recursive(n, x, k, extended=not strict)),
        "theorem1": lambda: formulas.gamma_value(n, x, k),
        "beta": lambda: as_int(formulas.gamma_via_beta(n, x, k)),
        "gamma_bar": lambda: as_int(formulas.gamma_via_gamma_bar(n, x, k)),
        "genfun": lambda: genfun.hmt_gf_coeff(n, x, k),
    }
    return _crosscheck(args, methods, "theorem1", "brute" if strict else "recursion")


POLY_TARGETS = ("gamma", "gamma_star", "gamma_bar", "alpha", "beta_base")


def emit_poly(target: str, n: int, method: str = "theorem1") -> MultiPoly:
    if target == "gamma":
        return formulas.gamma_via_inverse_ops(n) if method == "inverse" else formulas.gamma_theorem1(n)
    if target == "gamma_star":
        return formulas.gamma_star(n)
    if target == "gamma_bar":
        return formulas.gamma_bar(n)
    if target == "alpha":
        return formulas.alpha_poly(n)
    if target == "beta_base":
        return formulas.beta_poly(n)
    raise InvalidInputError(f"unknown target {target!r}; choose from {', '.join(POLY_TARGETS)}")


def hmt_poly(args) -> Outcome:
    if args.rows < 1:
        raise InvalidInputError(f"--rows must be >= 1, got {args.rows}")
    _check_guard(args.rows, SYMBOLIC_GUARD, args, "--rows")
    if args.method not in ("theorem1", "inverse"):
        raise InvalidInputError("poly --method must be theorem1 or inverse")
    if args.method == "inverse" and args.target != "gamma":
        raise InvalidInputError("the inverse method only produces the gamma target")
    text = emit_poly(args.target, args.rows, args.method).to_text()
    return Outcome(text, args.method, text)


def mt_count(args) -> Outcome:
    k = args.bottom
    if not k:
        raise InvalidInputError("--bottom must not be empty")
    n = len(k)
    strict = all(a < b for a, b in zip(k, k[1:]))
    if args.method == "brute" and not strict:
        raise InvalidInputError("enumeration needs a strictly increasing bottom row")
    methods = {"brute": lambda: brute.count_mt_brute(k),
               "operator": lambda: formulas.alpha_value(n, k),
               "genfun": lambda: genfun.mt_gf_coeff(n, k)}
    return _crosscheck(args, methods, "operator", "brute" if strict else "genfun")


def asm_count(args) -> Outcome:
    n = args.size
    if n < 1:
        raise InvalidInputError(f"--size must be >= 1, got {n}")
    if args.method == "brute" or (args.crosscheck and args.method == "product"):
        _check_guard(n, ASM_GUARD, args, "--size")
    methods = {"brute": lambda: brute.count_asm_brute(n, allow_large=args.unsafe_sizes),
               "product": lambda: formulas.asm_count(n),
               "operator": lambda: formulas.alpha_value(n, range(1, n + 1)),
               "constant_term": lambda: genfun.asm_constant_term(n)}
    return _crosscheck(args, methods, "product", "brute")


def vsasm_count(args) -> Outcome:
    size = args.size
    if size < 1 or size % 2 == 0:
        raise InvalidInputError(f"--size must be odd and positive, got {size}")
    n = (size - 1) // 2
    if args.method == "brute" or (args.crosscheck and args.method == "product"):
        _check_guard(size, ASM_GUARD, args, "--size")
    methods = {"brute": lambda: brute.count_vsasm_brute(size, allow_large=args.unsafe_sizes),
               "product": lambda: formulas.vsasm_count(n) if n else 1,
               "halved": lambda: brute.count_hmt_brute(2 * n, n, range(1, n + 1)) if n else 1}
    return _crosscheck(args, methods, "product", "brute")


def gf_coeff(args) -> Outcome:
    n, k = args.rows, args.exponents
    if n < 1:
        raise InvalidInputError(f"--rows must be >= 1, got {n}")
    if args.family == "mt":
        if len(k) != n:
            raise InvalidInputError(f"--exponents needs {n} entries, got {len(k)}")
        value = genfun.mt_gf_coeff(n, k)
        return Outcome(value, "negative-binomial convolution", str(value))
    if args.max is None:
        raise InvalidInputError("--max is required for the hmt family")
    if len(k) != half(n):
        raise InvalidInputError(f"--exponents needs {half(n)} entries, got {len(k)}")
    value = genfun.hmt_gf_coeff(n, args.max, k)
    return Outcome(value, "negative-binomial convolution in 1/X", str(value))


def run_verify(args) -> Outcome:
    bounds = verify.Bounds(max_rows=args.max_rows, max_x=args.max_x, instances=args.instances,
                           window=args.window, unsafe_sizes=args.unsafe_sizes)
    report = verify.run_suite(args.suite, bounds, args.seed)
    return Outcome(report.to_dict(), f"suite {args.suite}", report.to_text(),
                   EXIT_OK if report.ok else EXIT_MISMATCH)


# argument parsing


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"),
                   default=os.environ.get(FORMAT_ENV, "text"),
                   help=f"output format (default from ${FORMAT_ENV}, else text)")
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--unsafe-sizes", action="store_true", help="lift the size guards")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible JSON")
    return p


def _counting(p: argparse.ArgumentParser, methods: tuple[str, ...], default: str) -> None:
    p.add_argument("--method", choices=methods, default=default)
    p.add_argument("--crosscheck", action="store_true", help="also run a second method and compare")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="monotri", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    hmt = top.add_parser("hmt", help="halved monotone triangles").add_subparsers(dest="action", required=True)
    p = hmt.add_parser("count", parents=[common], help="count halved triangles with a given bottom row")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--max", type=int, required=True, help="upper bound x for all entries")
    p.add_argument("--bottom", type=_int_list, required=True)
    p.add_argument("--weak", action="store_true", help="weakly increasing rows")
    _counting(p, ("brute", "recursion", "theorem1", "beta", "gamma_bar", "genfun", "product"), "theorem1")
    p.set_defaults(handler=hmt_count)
    p = hmt.add_parser("poly", parents=[common], help="print a count polynomial")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--target", choices=POLY_TARGETS, default="gamma")
    p.add_argument("--method", choices=("theorem1", "inverse"), default="theorem1")
    p.set_defaults(handler=hmt_poly)

    mt = top.add_parser("mt", help="monotone triangles").add_subparsers(dest="action", required=True)
    p = mt.add_parser("count", parents=[common])
    p.add_argument("--bottom", type=_int_list, required=True)
    _counting(p, ("brute", "operator", "genfun"), "operator")
    p.set_defaults(handler=mt_count)

    asm = top.add_parser("asm", help="alternating sign matrices").add_subparsers(dest="action", required=True)
    p = asm.add_parser("count", parents=[common])
    p.add_argument("--size", type=int, required=True)
    _counting(p, ("brute", "product", "operator", "constant_term"), "product")
    p.set_defaults(handler=asm_count)

    vs = top.add_parser("vsasm", help="vertically symmetric ASMs").add_subparsers(dest="action", required=True)
    p = vs.add_parser("count", parents=[common])
    p.add_argument("--size", type=int, required=True, help="odd matrix size 2n+1")
    _counting(p, ("brute", "product", "halved"), "product")
    p.set_defaults(handler=vsasm_count)

    gf = top.add_parser("gf", help="generating-function coefficients").add_subparsers(dest="action", required=True)
    p = gf.add_parser("coeff", parents=[common])
    p.add_argument("--family", choices=("mt", "hmt"), required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--exponents", type=_int_list, required=True)
    p.add_argument("--max", type=int, help="upper bound x (hmt family)")
    p.set_defaults(handler=gf_coeff)

    p = top.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-x", type=int, default=5)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--window", type=int, default=20)
    p.set_defaults(handler=run_verify)
    return parser


def _query(args) -> dict:
    skip = {"handler", "format", "output", "no_timing"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK

    start = time.perf_counter()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            outcome = args.handler(args)
        except InvalidInputError as exc:
            print(f"monotri: error: {exc}", file=stderr)
            return EXIT_INVALID
        except VerificationError as exc:
            print(f"monotri: verification failed: {exc}", file=stderr)
            return EXIT_MISMATCH
    elapsed = 0 if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    outcome.warnings = [str(w.message) for w in caught]

    if args.format == "json":
        envelope = {"query": _query(args), "result": _jsonable(outcome.result),
                    "method": outcome.method, "elapsed_ms": elapsed, "warnings": outcome.warnings}
        if isinstance(outcome.result, dict) and "properties" in outcome.result:
            envelope["result"] = outcome.result  # verify reports keep their small counts numeric
        text = json.dumps(envelope, sort_keys=False)
    else:
        text = outcome.text
        for w in outcome.warnings:
            print(f"monotri: warning: {w}", file=stderr)

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return outcome.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
