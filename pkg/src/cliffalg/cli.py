"""Batch command-line front end.

Subcommands:
    repr    emit the generator matrices for a signature/preset
    verify  run a theorem verification suite deterministically
    apply   apply an operation to JSON multivector files

Exit codes: 0 success, 1 verification failures, 2 usage/parse errors,
3 signature mismatch between inputs.  CLIFFALG_EPS overrides the default
tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (
    EPS_DEFAULT,
    Multivector,
    Signature,
    SignatureMismatch,
    anticommutator,
    clifford_product,
    commutator,
    exterior_product,
    grade_project,
    multivector_from_dict,
    multivector_to_dict,
)
from .idempotents import preset_ideal_basis
from .involutions import (
    clifford_conjugate,
    complex_conjugate,
    dagger,
    grade_involution,
    hodge_star,
    reversion,
)
from .representations import Representation, format_matrix, matrix_to_dict
from .verify import SUITES, run_suite

_BINARY_OPS = {
    "mul": clifford_product,
    "wedge": exterior_product,
    "add": lambda u, v: u + v,
    "sub": lambda u, v: u - v,
    "commutator": commutator,
    "anticommutator": anticommutator,
}
_UNARY_OPS = {
    "dagger": dagger,
    "reversion": reversion,
    "grade-involution": grade_involution,
    "conj": complex_conjugate,
    "clifford-conj": clifford_conjugate,
    "star": hodge_star,
}


def _default_eps() -> float:
    value = os.environ.get("CLIFFALG_EPS")
    if value is None:
        return EPS_DEFAULT
    try:
        return float(value)
    except ValueError:
        print(f"error: CLIFFALG_EPS={value!r} is not a number", file=sys.stderr)
        raise SystemExit(2)


def _parse_signature(text: str) -> Signature:
    try:
        p_str, q_str = text.split(",")
        return Signature(int(p_str), int(q_str))
    except (ValueError, TypeError) as exc:
        print(f"error: bad signature {text!r}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_repr(args) -> int:
    sig = _parse_signature(args.signature)
    try:
        basis = preset_ideal_basis(sig, args.preset)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = Representation(basis)
    matrices = [rep.generator_matrix(a) for a in range(1, sig.n + 1)]
    if args.format == "json":
        payload = {
            "signature": [sig.p, sig.q],
            "preset": args.preset,
            "matrices": [matrix_to_dict(m) for m in matrices],
        }
        print(json.dumps(payload, indent=2))
    else:
        for a, m in enumerate(matrices, start=1):
            print(f"e^{a} =")
            print(format_matrix(m, tol=args.eps))
            print()
    return 0


def cmd_verify(args) -> int:
    if args.theorem not in SUITES:
        print(f"error: unknown theorem id {args.theorem!r}; valid: {', '.join(SUITES)}",
              file=sys.stderr)
        return 2
    if args.all == (args.signature is not None):
        print("error: give exactly one of --signature p,q or --all", file=sys.stderr)
        return 2
    signatures = None if args.all else [_parse_signature(args.signature)]
    try:
        report = run_suite(args.theorem, signatures=signatures, trials=args.trials,
                           seed=args.seed, eps=args.eps, jobs=args.jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        scope = "all signatures" if args.all else f"signature {args.signature}"
        print(f"theorem {args.theorem} [{scope}] seed={args.seed} trials={args.trials} "
              f"eps={args.eps:g}: {report.checks} checks, {len(report.failures)} failures "
              f"({report.elapsed_s:.2f}s)")
        for failure in report.failures:
            print(f"  FAIL {failure['case']}: residual {failure['residual']:.3e}")
        for note in report.notes:
            print(f"  note: {note}")
    return 0 if report.ok else 1


def _load_multivector(path: str) -> Multivector:
    try:
        with open(path) as handle:
            return multivector_from_dict(json.load(handle))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: cannot read multivector from {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_apply(args) -> int:
    name = args.op
    if name in _BINARY_OPS:
        if len(args.inputs) != 2:
            print(f"error: op {name} takes two inputs", file=sys.stderr)
            return 2
        u, v = (_load_multivector(p) for p in args.inputs)
        try:
            result = _BINARY_OPS[name](u, v)
        except SignatureMismatch as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
    elif name in _UNARY_OPS or name == "project":
        if len(args.inputs) != 1:
            print(f"error: op {name} takes one input", file=sys.stderr)
            return 2
        u = _load_multivector(args.inputs[0])
        if name == "project":
            if args.grade is None:
                print("error: op project requires --grade", file=sys.stderr)
                return 2
            try:
                result = grade_project(u, args.grade)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        else:
            result = _UNARY_OPS[name](u)
    else:
        ops = ", ".join(sorted(list(_BINARY_OPS) + list(_UNARY_OPS) + ["project"]))
        print(f"error: unknown op {name!r}; valid: {ops}", file=sys.stderr)
        return 2
    text = json.dumps(multivector_to_dict(result), indent=2)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffalg",
                                     description="Clifford algebra computation and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_repr = sub.add_parser("repr", help="emit generator matrices")
    p_repr.add_argument("--signature", required=True, metavar="p,q")
    p_repr.add_argument("--preset", default="paper", choices=["standard", "paper", "dirac"])
    p_repr.add_argument("--format", default="pretty", choices=["json", "pretty"])
    p_repr.add_argument("--eps", type=float, default=_default_eps())
    p_repr.set_defaults(func=cmd_repr)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--theorem", required=True, metavar="ID",
                          help="1..8, golden, or unitary")
    p_verify.add_argument("--signature", metavar="p,q")
    p_verify.add_argument("--all", action="store_true",
                          help="run over the suite's full signature range")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--eps", type=float, default=_default_eps())
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", default="pretty", choices=["json", "pretty"])
    p_verify.set_defaults(func=cmd_verify)

    p_apply = sub.add_parser("apply", help="apply an operation to JSON multivectors")
    p_apply.add_argument("op", metavar="OP")
    p_apply.add_argument("inputs", nargs="+", metavar="FILE")
    p_apply.add_argument("--grade", type=int, default=None)
    p_apply.add_argument("-o", "--output", default=None)
    p_apply.set_defaults(func=cmd_apply)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
