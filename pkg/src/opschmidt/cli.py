"""Command-line front end: synth, rank, verify, sweep, brute."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import matrixio
from .core import DEFAULT_TOL, realignment_singular_values, schmidt_rank
from .fourier import DEFAULT_EPS
from .oracle import brute_force_perm_ranks, sweep, verify
from .synth import Rank3Impossible, RankOutOfRange, SynthesisRequest, synthesize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IMPOSSIBLE = 2
EXIT_FAILED = 3

SWEEP_COLUMNS = [
    "n", "m", "r", "construction", "unitarity_residual", "numeric_rank", "exact_rank", "pass",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for rank-3 rejections
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_synth(args) -> int:
    try:
        req = SynthesisRequest(args.n, args.m, args.r, tol=args.tol, eps=args.eps, seed=args.seed)
    except Rank3Impossible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except RankOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    u, cert = synthesize(req)
    if args.out:
        matrixio.save(args.out, u, args.format, cert.construction, cert.to_dict())
    print(_dump(cert.to_dict()))
    return EXIT_OK if cert.passed else EXIT_FAILED


def _load(args):
    return matrixio.load(args.input, args.n, args.m, args.format)


def cmd_rank(args) -> int:
    try:
        u = _load(args)
        r = schmidt_rank(u, args.tol)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sv = realignment_singular_values(u)
    print(f"schmidt_rank {r}")
    print("singular_values " + " ".join(f"{s:.6e}" for s in sv))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        u = _load(args)
        cert = verify(u, args.r, args.tol)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_dump(cert.to_dict()))
    return EXIT_OK if cert.passed else EXIT_FAILED


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def cmd_sweep(args) -> int:
    bound = range(args.min, args.max + 1)
    rows = sweep(bound, bound, args.tol, args.seed, args.eps)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(v) for v in (
                row.n, row.m, row.r, row.construction, row.unitarity_residual,
                row.numeric_rank, row.exact_rank, row.passed,
            )])
    finally:
        if out is not sys.stdout:
            out.close()
    if args.matrix_dir:
        mdir = Path(args.matrix_dir)
        mdir.mkdir(parents=True, exist_ok=True)
        for row in rows:
            if row.operator is not None:
                matrixio.write_mtx(mdir / f"u_{row.n}_{row.m}_{row.r}.mtx", row.operator.matrix)
    failed = [row for row in rows if not row.passed]
    for row in failed:
        print(f"FAIL n={row.n} m={row.m} r={row.r} {row.error or ''}", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_brute(args) -> int:
    exhaustive = args.samples is None
    if exhaustive and args.n > 3:
        print("error: exhaustive enumeration needs n <= 3; pass --samples", file=sys.stderr)
        return EXIT_USAGE
    found = brute_force_perm_ranks(args.n, args.samples, args.seed)
    print("attained " + " ".join(str(r) for r in found))
    missing = sorted(set(range(args.n, args.n ** 2 + 1)) - set(found))
    print("missing " + " ".join(str(r) for r in missing))
    for r, (alpha, beta) in found.items():
        print(f"witness {r} alpha={[list(p) for p in alpha]} beta={[list(p) for p in beta]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opschmidt", description="Bipartite unitaries of prescribed operator Schmidt rank.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def numeric(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--eps", type=float, default=DEFAULT_EPS)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("synth", help="construct a unitary of given rank")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-o", "--out")
    p.add_argument("--format", choices=["mtx", "json"])
    numeric(p)
    p.set_defaults(func=cmd_synth)

    for name, func, help_ in [("rank", cmd_rank, "Schmidt rank of a stored matrix"),
                              ("verify", cmd_verify, "certify a stored matrix against a rank")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input")
        p.add_argument("-n", type=int)
        p.add_argument("-m", type=int)
        if name == "verify":
            p.add_argument("-r", type=int, required=True)
        p.add_argument("--format", choices=["mtx", "json"])
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="synthesize and certify every rank over a dimension range")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=5)
    p.add_argument("-o", "--out", help="CSV path (default: stdout)")
    p.add_argument("--matrix-dir", help="also write every matrix as .mtx here")
    numeric(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("brute", help="enumerate ranks of permutation unitaries")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, help="random pairs instead of full enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_brute)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    np.set_printoptions(precision=6)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
