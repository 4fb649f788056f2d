"""Command-line front end.

Subcommands: count (worker counts for one parameter point), sweep
(CSV tables over z or over shapes), run (end-to-end protocol on matrix
files), verify (closed forms against the brute-force oracle), audit
(privacy rank checks on a real transcript).

Exit codes: 0 success, 2 invalid arguments/input, 3 unwritable output,
4 protocol self-check failure, 5 audit failure, 1 verify discrepancies.
"""

import argparse
import os
import sys

import numpy as np

from polydot_cmpc import counts, powersets
from polydot_cmpc.blockmatrix import dense_matmul, read_matrix, write_matrix
from polydot_cmpc.errors import PolyDotError
from polydot_cmpc.field import FieldModulus, MERSENNE61
from polydot_cmpc.powersets import SchemeParams
from polydot_cmpc.protocol import ProtocolConfig, audit_privacy, run_protocol

CSV_HEADER = "s,t,z,n_polydot,region,n_entangled,n_ssmm,n_gcsa,winner"

DEFAULT_SEED = 0


def _seed_default() -> int:
    env = os.environ.get("POLYDOT_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        return DEFAULT_SEED


def _params_or_exit(s: int, t: int, z: int) -> SchemeParams:
    for name, value in (("s", s), ("t", t), ("z", z)):
        if value < 1:
            print(f"error: {name} must be >= 1", file=sys.stderr)
            raise SystemExit(2)
    return SchemeParams(s=s, t=t, z=z)


def _report_row(report) -> str:
    p = report.params
    return (f"{p.s},{p.t},{p.z},{report.n_polydot},{report.region_label},"
            f"{report.n_entangled},{report.n_ssmm},{report.n_gcsa},{report.winner}")


def cmd_count(args) -> int:
    params = _params_or_exit(args.s, args.t, args.z)
    report = counts.best_scheme(params)
    print(f"polydot={report.n_polydot} region={report.region_label}")
    print(f"entangled={report.n_entangled}")
    print(f"ssmm={report.n_ssmm}")
    print(f"gcsa={report.n_gcsa}")
    print(f"winner={report.winner}")
    return 0


def _shape_pairs(product: int) -> list[tuple[int, int]]:
    return [(s, product // s) for s in range(1, product + 1) if product % s == 0]


def cmd_sweep(args) -> int:
    rows = []
    if args.product is not None:
        if args.z is None:
            print("error: shape sweep needs --z", file=sys.stderr)
            return 2
        if args.product < 1:
            print("error: product must be >= 1", file=sys.stderr)
            return 2
        for s, t in _shape_pairs(args.product):
            rows.append(counts.best_scheme(_params_or_exit(s, t, args.z)))
    else:
        if args.s is None or args.t is None or args.zmin is None or args.zmax is None:
            print("error: z sweep needs --s --t --zmin --zmax", file=sys.stderr)
            return 2
        if args.zmin < 1 or args.zmax < args.zmin:
            print("error: need 1 <= zmin <= zmax", file=sys.stderr)
            return 2
        for z in range(args.zmin, args.zmax + 1):
            rows.append(counts.best_scheme(_params_or_exit(args.s, args.t, z)))
    lines = [CSV_HEADER] + [_report_row(r) for r in rows]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_run(args) -> int:
    try:
        a, mod_a = read_matrix(args.a)
        b, mod_b = read_matrix(args.b)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if mod_a != mod_b or a.shape != b.shape:
        print("error: input matrices must share m and q", file=sys.stderr)
        return 2
    params = _params_or_exit(args.s, args.t, args.z)
    try:
        config = ProtocolConfig(params=params, m=a.shape[0], modulus=mod_a,
                                seed=args.seed)
        y, transcript = run_protocol(a, b, config)
    except PolyDotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    expected = dense_matmul(a.T.copy(), b, mod_a)
    ok = bool(np.array_equal(y, expected))
    if args.out is not None:
        try:
            write_matrix(args.out, y, mod_a)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 3
    print(f"workers={config.n_workers}")
    print(f"master_evals={transcript.master_evals_used}")
    print(f"selfcheck={'ok' if ok else 'FAILED'}")
    return 0 if ok else 4


def _verify_grid(smax: int, tmax: int, zslack: int, stmax):
    for s in range(1, smax + 1):
        for t in range(1, tmax + 1):
            if stmax is not None and s * t > stmax:
                continue
            for z in range(1, 2 * t * s + zslack + 1):
                yield SchemeParams(s=s, t=t, z=z)


def cmd_verify(args) -> int:
    mismatches = condition_failures = unsound = 0
    gaps = {"entangled": 0, "ssmm": 0, "gcsa": 0}
    checked = 0
    baselines = {"entangled": counts.n_entangled, "ssmm": counts.n_ssmm,
                 "gcsa": counts.n_gcsa}
    for params in _verify_grid(args.smax, args.tmax, args.zslack, args.stmax):
        checked += 1
        formula = counts.n_polydot(params)
        oracle = len(powersets.support_H(params))
        if formula != oracle:
            mismatches += 1
            print(f"MISMATCH s={params.s} t={params.t} z={params.z} "
                  f"formula={formula} oracle={oracle}")
        ok, violations = powersets.check_conditions(params)
        if not ok:
            condition_failures += 1
            print(f"CONDITIONS-FAIL s={params.s} t={params.t} z={params.z} "
                  f"violations={len(violations)}")
        for lemma_no, which in (("1", "entangled"), ("2", "ssmm"), ("3", "gcsa")):
            baseline = baselines[which](params)
            bad = counts.lemma_soundness_violations(which, params)
            if bad:
                unsound += 1
                print(f"LEMMA{lemma_no}-UNSOUND s={params.s} t={params.t} "
                      f"z={params.z} conditions={bad} polydot={formula} "
                      f"{which}={baseline}")
            if formula < baseline and not counts.lemma_region(which, params):
                gaps[which] += 1
    print(f"checked {checked} parameter points")
    print(f"equivalence mismatches: {mismatches}")
    print(f"condition failures: {condition_failures}")
    print(f"lemma soundness violations: {unsound}")
    for which, count in gaps.items():
        print(f"lemma completeness gaps vs {which}: {count}")
    return 0 if mismatches == 0 and condition_failures == 0 else 1


def cmd_audit(args) -> int:
    params = _params_or_exit(args.s, args.t, args.z)
    try:
        modulus = FieldModulus(args.q)
        config = ProtocolConfig(params=params, m=args.m, modulus=modulus,
                                seed=args.seed)
    except (ValueError, PolyDotError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stream = np.random.default_rng(args.seed)  # inputs only; protocol RNG is keyed
    a = np.asarray(stream.integers(0, modulus.q, size=(args.m, args.m)),
                   dtype=np.int64)
    b = np.asarray(stream.integers(0, modulus.q, size=(args.m, args.m)),
                   dtype=np.int64)
    try:
        _, transcript = run_protocol(a, b, config,
                                     corrupt_shares=args.corrupt_shares)
    except PolyDotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = audit_privacy(transcript, config, args.subsets)
    failed = report.failure_count
    print(f"subsets={len(report.subsets)} passed={len(report.subsets) - failed} "
          f"failed={failed}")
    for entry in report.subsets:
        if not entry.passed:
            print(f"FAIL subset={list(entry.subset)} structures={entry.failures}")
    return 0 if report.passed else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydot",
        description="Coded multi-party matrix multiplication toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="worker counts for one (s, t, z)")
    p_count.add_argument("--s", type=int, required=True)
    p_count.add_argument("--t", type=int, required=True)
    p_count.add_argument("--z", type=int, required=True)
    p_count.set_defaults(func=cmd_count)

    p_sweep = sub.add_parser("sweep", help="CSV sweep over z or over shapes")
    p_sweep.add_argument("--s", type=int)
    p_sweep.add_argument("--t", type=int)
    p_sweep.add_argument("--z", type=int, help="fixed z for a shape sweep")
    p_sweep.add_argument("--zmin", type=int)
    p_sweep.add_argument("--zmax", type=int)
    p_sweep.add_argument("--product", type=int,
                         help="sweep all (s, t) with s*t equal to this")
    p_sweep.add_argument("--out", help="CSV path (stdout when omitted)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_run = sub.add_parser("run", help="run the protocol on two matrix files")
    p_run.add_argument("--a", required=True)
    p_run.add_argument("--b", required=True)
    p_run.add_argument("--s", type=int, required=True)
    p_run.add_argument("--t", type=int, required=True)
    p_run.add_argument("--z", type=int, required=True)
    p_run.add_argument("--seed", type=int, default=_seed_default())
    p_run.add_argument("--out", help="write Y here in the matrix text format")
    p_run.set_defaults(func=cmd_run)

    p_verify = sub.add_parser(
        "verify", help="closed forms and conditions against the oracle")
    p_verify.add_argument("--smax", type=int, default=6)
    p_verify.add_argument("--tmax", type=int, default=6)
    p_verify.add_argument("--zslack", type=int, default=5,
                          help="z runs to 2*t*s + zslack")
    p_verify.add_argument("--stmax", type=int, default=None,
                          help="skip shapes with s*t above this")
    p_verify.set_defaults(func=cmd_verify)

    p_audit = sub.add_parser("audit", help="privacy rank checks on one run")
    p_audit.add_argument("--s", type=int, required=True)
    p_audit.add_argument("--t", type=int, required=True)
    p_audit.add_argument("--z", type=int, required=True)
    p_audit.add_argument("--m", type=int, required=True)
    p_audit.add_argument("--q", type=int, default=MERSENNE61)
    p_audit.add_argument("--seed", type=int, default=_seed_default())
    p_audit.add_argument("--subsets", type=int, default=100)
    p_audit.add_argument("--corrupt-shares", action="store_true",
                         help="test hook: reuse one source mask")
    p_audit.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
