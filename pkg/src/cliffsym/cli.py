"""Command-line front end.

Exit status: 0 on success (or a passing ``verify``), 1 when ``verify`` fails,
2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gamma_rep as gr
from .clifford import Signature, SignatureError, dagger, norm, scalar_product, star, trace
from .harness import DEFAULT_SEED, DEFAULT_TRIALS, run_theorem_suite
from .lie_sets import exp, is_member
from .parser import ParseError, parse_multivector
from .serialize import (
    format_complex,
    format_matrix,
    format_multivector,
    matrix_from_list,
    matrix_to_list,
    multivector_to_dict,
)

SET_CHOICES = ("W", "SW", "w", "sw", "Sp", "sp")


class UsageError(Exception):
    pass


def _mv(args, text):
    return parse_multivector(text, Signature(args.p, args.q))


def _emit_mv(args, u):
    if args.json:
        print(json.dumps(multivector_to_dict(u)))
    else:
        print(format_multivector(u))


def _emit_scalar(args, c: complex):
    if args.json:
        print(json.dumps([c.real + 0.0, c.imag + 0.0]))
    else:
        print(format_complex(c))


def _emit_matrix(args, m):
    if args.json:
        print(json.dumps(matrix_to_list(m)))
    else:
        print(format_matrix(m))


def cmd_eval(args):
    _emit_mv(args, _mv(args, args.expr))


def cmd_dagger(args):
    _emit_mv(args, dagger(_mv(args, args.expr)))


def cmd_star(args):
    _emit_mv(args, star(_mv(args, args.expr)))


def cmd_tr(args):
    _emit_scalar(args, trace(_mv(args, args.expr)))


def cmd_dot(args):
    _emit_scalar(args, scalar_product(_mv(args, args.left), _mv(args, args.right)))


def cmd_norm(args):
    print(repr(norm(_mv(args, args.expr))))


def cmd_exp(args):
    _emit_mv(args, exp(_mv(args, args.expr), args.tol))


def cmd_member(args):
    report = is_member(_mv(args, args.expr), args.set, args.tol)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"set: {report.kind.value}")
        print(f"member: {'true' if report.member else 'false'}")
        for name, value in report.residuals.items():
            print(f"{name}: {value!r}")
        print(f"tol: {report.tol!r}")


def cmd_rep(args):
    _emit_matrix(args, gr.gamma(_mv(args, args.expr)))


def cmd_invrep(args):
    try:
        with open(args.matrix_file) as fh:
            rows = json.load(fh)
        m = matrix_from_list(rows)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read matrix file: {exc}") from exc
    _emit_mv(args, gr.gamma_inverse(m))


def cmd_verify(args):
    report = run_theorem_suite(seed=args.seed, tol=args.tol, trials=args.trials)
    if args.json:
        print(report.to_json(timing=args.timing))
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffsym", description="Clifford algebra Cl(p,q) calculator")
    parser.add_argument("-p", type=int, default=1, help="number of +1 generators (default 1)")
    parser.add_argument("-q", type=int, default=3, help="number of -1 generators (default 3)")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_expr(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr")
        sp.set_defaults(func=fn)
        return sp

    with_expr("eval", cmd_eval, "evaluate an expression")
    with_expr("dagger", cmd_dagger, "Hermitian conjugate")
    with_expr("star", cmd_star, "pseudo-Hermitian conjugate (Cl(1,3) only)")
    with_expr("tr", cmd_tr, "trace (scalar coefficient)")
    with_expr("norm", cmd_norm, "canonical norm")
    sp = sub.add_parser("dot", help="scalar product (U, V) = Tr(V^dagger U)")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_dot)
    with_expr("exp", cmd_exp, "exponential").add_argument("--tol", type=float, default=1e-12)
    sp = with_expr("member", cmd_member, "membership report for a Lie group or algebra")
    sp.add_argument("--set", required=True, choices=SET_CHOICES)
    sp.add_argument("--tol", type=float, default=1e-9)
    with_expr("rep", cmd_rep, "matrix representation gamma(U)")
    sp = sub.add_parser("invrep", help="inverse representation of a 4x4 matrix file")
    sp.add_argument("matrix_file")
    sp.set_defaults(func=cmd_invrep)
    sp = sub.add_parser("verify", help="run the isomorphism check suite")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--timing", action="store_true", help="include elapsed times in --json output")
    sp.set_defaults(func=cmd_verify)
    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit 2, --help exits 0
        return exc.code
    try:
        if getattr(args, "tol", 1.0) <= 0 or getattr(args, "trials", 1) < 1:
            raise UsageError("--tol must be positive and --trials at least 1")
        return args.func(args) or 0
    except (ParseError, SignatureError, UsageError, gr.DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
