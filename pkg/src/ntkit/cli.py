"""Command-line front end: one subcommand per operation family.

Exit codes: 0 on success, 1 on usage errors (unknown subcommand, malformed
integer), 2 on domain errors.  Every integer is read and written as a
decimal string, so arbitrarily wide values survive any consumer.  Plain
output prints final values one per line; ``--format json`` emits a
machine-readable document; ``bench`` writes CSV.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import asdict
from typing import Sequence

from . import bench as bench_mod
from .diophantine import (
    Congruence,
    Fraction,
    crt_solve,
    reduce_fraction,
    solve_cyclic_system,
)
from .errors import DomainError
from .gcd import Algorithm, GcdStep, GcdTrace, StepKind, run_algorithm
from .primes import (
    chinese_hypothesis_classify,
    find_base2_pseudoprimes,
    hui_yang_plan,
    irreducible_in_range,
)

_ALGO_CHOICES = [a.value for a in Algorithm]


def _natural(text: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    return int(text)


def _fraction_arg(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)/(\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected <num>/<den>, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _coeff_list(text: str) -> list[int]:
    if not re.fullmatch(r"\d+(,\d+)*", text):
        raise argparse.ArgumentTypeError(f"expected c1,c2,..., got {text!r}")
    return [int(part) for part in text.split(",")]


def _algo_list(text: str) -> list[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    for name in names:
        if name not in _ALGO_CHOICES:
            raise argparse.ArgumentTypeError(f"unknown algorithm {name!r}")
    if not names:
        raise argparse.ArgumentTypeError("no algorithms given")
    return names


def render_step(step: GcdStep) -> str:
    """One display line per step, e.g. ``63-35=28`` or ``28=4×7``."""
    ops = step.operands
    if step.kind is StepKind.SUBTRACT:
        return f"{ops[0]}-{ops[1]}={ops[2]}"
    if step.kind is StepKind.REMOVE_TWO_POWER:
        if len(ops) == 3:
            return f"{ops[0]}={ops[1]}×{ops[2]}"
        return f"{ops[0]}/2={ops[0] // 2} {ops[1]}/2={ops[1] // 2}"
    if step.kind is StepKind.HALVE:
        return f"{ops[0]}/2={ops[1]}"
    if step.kind is StepKind.MOD_REDUCE:
        return f"{ops[0]} mod {ops[1]}={ops[2]}"
    if step.kind is StepKind.SWAP:
        return f"swap({ops[0]}, {ops[1]})"
    return f"{ops[0]}={ops[0]}"


def trace_to_dict(trace: GcdTrace) -> dict:
    """JSON document for a trace; all integers as decimal strings."""
    return {
        "algorithm": trace.algorithm.value,
        "input": [str(value) for value in trace.inputs],
        "steps": [
            {"kind": step.kind.value, "operands": [str(op) for op in step.operands]}
            for step in trace.steps
        ],
        "result": str(trace.result),
        "counts": asdict(trace.counts),
    }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _add_format(parser: argparse.ArgumentParser, *, csv_ok: bool = False) -> None:
    choices = ["plain", "json"] + (["csv"] if csv_ok else [])
    parser.add_argument(
        "--format", choices=choices, default="plain", help="output format"
    )
    parser.add_argument(
        "--json",
        dest="format",
        action="store_const",
        const="json",
        help="shorthand for --format json",
    )


def _cmd_gcd(args: argparse.Namespace) -> int:
    record = args.trace or args.format == "json"
    trace = run_algorithm(args.algo, args.a, args.b, record_steps=record)
    if args.format == "json":
        _emit_json(trace_to_dict(trace))
    else:
        if args.trace:
            for step in trace.steps:
                print(render_step(step))
        print(trace.result)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    spec = bench_mod.TrialSpec(
        algorithms=tuple(args.algo),
        bits_min=args.bits_min,
        bits_max=args.bits_max,
        bits_step=args.bits_step,
        trials_per_size=args.trials,
        seed=args.seed,
    )
    report = bench_mod.run_trials(spec)
    if args.out:
        bench_mod.write_csv(report, args.out)
    else:
        bench_mod.write_csv(report, sys.stdout)
    return 0


def _cmd_fit(args: argparse.Namespace) -> int:
    report = bench_mod.read_csv(args.infile)
    result = bench_mod.fit_growth(report, args.algo)
    if args.format == "json":
        _emit_json(
            {
                "algorithm": args.algo,
                "slope": result.slope,
                "intercept": result.intercept,
                "r_squared": result.r_squared,
            }
        )
    else:
        print(f"slope={result.slope}")
        print(f"intercept={result.intercept}")
        print(f"r_squared={result.r_squared}")
    return 0


def _cmd_primes(args: argparse.Namespace) -> int:
    values = irreducible_in_range(args.lo, args.hi)
    if args.format == "json":
        _emit_json(
            {
                "from": str(args.lo),
                "to": str(args.hi),
                "primes": [str(v) for v in values],
            }
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("n",))
        for value in values:
            writer.writerow((value,))
    else:
        for value in values:
            print(value)
    return 0


def _cmd_multiply(args: argparse.Namespace) -> int:
    if args.a == 0 or args.b == 0:
        base, factors, partials, product = None, [], [], 0
    else:
        base, factors = hui_yang_plan(args.a, args.b, grouped=args.grouped)
        partials = []
        acc = base
        for scalar in factors:
            acc *= scalar
            partials.append(acc)
        product = acc if factors else base
    if args.format == "json":
        _emit_json(
            {
                "a": str(args.a),
                "b": str(args.b),
                "grouped": args.grouped,
                "base": None if base is None else str(base),
                "factors": [str(f) for f in factors],
                "partials": [str(p) for p in partials],
                "product": str(product),
            }
        )
    else:
        if args.trace:
            running = base
            for scalar, partial in zip(factors, partials):
                print(f"{running}×{scalar}={partial}")
                running = partial
        print(product)
    return 0


def _cmd_pseudoprime(args: argparse.Namespace) -> int:
    values = find_base2_pseudoprimes(args.limit)
    if args.format == "json":
        _emit_json(
            {"limit": str(args.limit), "pseudoprimes": [str(v) for v in values]}
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("n",))
        for value in values:
            writer.writerow((value,))
    else:
        for value in values:
            print(value)
    return 0


def _cmd_crt(args: argparse.Namespace) -> int:
    values = args.values
    congruences = []
    for residue, modulus in zip(values[0::2], values[1::2]):
        if modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {modulus}")
        congruences.append(Congruence(residue % modulus, modulus))
    solution, modulus = crt_solve(congruences)
    if args.format == "json":
        _emit_json(
            {
                "congruences": [
                    {"residue": str(c.residue), "modulus": str(c.modulus)}
                    for c in congruences
                ],
                "solution": str(solution),
                "modulus": str(modulus),
            }
        )
    else:
        print(solution)
        print(modulus)
    return 0


def _unknown_labels(count: int) -> list[str]:
    if count <= 5:
        return list("abcde"[:count])
    return [f"u{i}" for i in range(1, count + 1)]


def _cmd_wujia(args: argparse.Namespace) -> int:
    solution = solve_cyclic_system(args.coeffs)
    labels = _unknown_labels(len(solution.unknowns))
    if args.format == "json":
        _emit_json(
            {
                "coefficients": [str(c) for c in args.coeffs],
                "f": str(solution.common_value),
                "unknowns": [str(u) for u in solution.unknowns],
            }
        )
    else:
        parts = [f"f={solution.common_value}"]
        parts += [f"{label}={value}" for label, value in zip(labels, solution.unknowns)]
        print(" ".join(parts))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    numerator, denominator = args.fraction
    reduced = reduce_fraction(Fraction(numerator, denominator))
    if args.format == "json":
        _emit_json(
            {
                "input": {"numerator": str(numerator), "denominator": str(denominator)},
                "reduced": {
                    "numerator": str(reduced.numerator),
                    "denominator": str(reduced.denominator),
                },
            }
        )
    else:
        print(f"{reduced.numerator}/{reduced.denominator}")
    return 0


def _cmd_hypothesis(args: argparse.Namespace) -> int:
    verdict = chinese_hypothesis_classify(args.n)
    if args.format == "json":
        _emit_json(
            {
                "n": str(verdict.n),
                "congruence_holds": verdict.congruence_holds,
                "is_prime": verdict.is_prime,
                "classification": verdict.classification.value,
            }
        )
    else:
        print(verdict.classification.value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntkit",
        description="Number-theory toolkit: traced GCD algorithms, operation-count "
        "benchmarks, irreducible numbers, pseudoprimes, CRT, and cyclic systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    p = sub.add_parser("gcd", help="greatest common divisor with optional step trace")
    p.add_argument("a", type=_natural)
    p.add_argument("b", type=_natural)
    p.add_argument("--algo", choices=_ALGO_CHOICES, default=Algorithm.ANCIENT.value)
    p.add_argument("--trace", action="store_true", help="print one line per step")
    _add_format(p)
    p.set_defaults(func=_cmd_gcd)

    p = sub.add_parser("bench", help="measure operation counts across bit sizes (CSV)")
    p.add_argument("--algo", type=_algo_list, required=True, metavar="LIST",
                   help="comma-separated algorithm names")
    p.add_argument("--bits-min", type=int, required=True)
    p.add_argument("--bits-max", type=int, required=True)
    p.add_argument("--bits-step", type=int, default=64)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV destination (stdout when omitted)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("fit", help="least-squares growth fit of a bench CSV")
    p.add_argument("--in", dest="infile", required=True, metavar="CSV")
    p.add_argument("--algo", choices=_ALGO_CHOICES, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("primes", help="irreducible numbers in a closed range")
    p.add_argument("--from", dest="lo", type=_natural, required=True)
    p.add_argument("--to", dest="hi", type=_natural, required=True)
    _add_format(p, csv_ok=True)
    p.set_defaults(func=_cmd_primes)

    p = sub.add_parser("multiply", help="factor-and-scale multiplication")
    p.add_argument("a", type=_natural)
    p.add_argument("b", type=_natural)
    p.add_argument("--trace", action="store_true", help="print each partial product")
    p.add_argument("--grouped", action="store_true",
                   help="apply repeated primes as one prime-power step")
    _add_format(p)
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("pseudoprime", help="base-2 Fermat pseudoprimes up to a limit")
    p.add_argument("--limit", type=_natural, required=True)
    _add_format(p, csv_ok=True)
    p.set_defaults(func=_cmd_pseudoprime)

    p = sub.add_parser("crt", help="simultaneous congruences: r1 m1 [r2 m2 ...]")
    p.add_argument("values", type=_natural, nargs="+", metavar="N")
    _add_format(p)
    p.set_defaults(func=_cmd_crt)

    p = sub.add_parser("wujia", help="least positive solution of the cyclic system "
                                     "f = c1*u1 + u2 = c2*u2 + u3 = ...")
    p.add_argument("--coeffs", type=_coeff_list, default=[2, 3, 4, 5, 6],
                   metavar="c1,c2,...")
    _add_format(p)
    p.set_defaults(func=_cmd_wujia)

    p = sub.add_parser("reduce", help="reduce a fraction to lowest terms")
    p.add_argument("fraction", type=_fraction_arg, metavar="<num>/<den>")
    _add_format(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("hypothesis", help="classify n against the base-2 congruence")
    p.add_argument("n", type=_natural)
    _add_format(p)
    p.set_defaults(func=_cmd_hypothesis)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if args.command == "crt" and len(args.values) % 2 != 0:
        print("error: crt expects residue/modulus pairs", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
