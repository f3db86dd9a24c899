"""Batch driver for the verification suites.

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
JSON reports are byte-deterministic for fixed inputs and seeds; wall-clock
timing goes to standard output only.
"""

import argparse
import json
import sys

from .classalg import StructureConstantCache
from .duality import verify_main_theorem
from .fixedring import hilbert_series
from .hypertoric import VectorConfig, verify_appendix_b
from .spaltenstein import SpaltensteinInstance, verify_appendix_a

HILBERT_VERIFY_MAX_N = 8
HILBERT_TABLE_MAX_N = 12
SPALTENSTEIN_MAX_N = 4


class UsageError(Exception):
    pass


def _write_report(report, path):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_hilbert_verify(args):
    if not 1 <= args.n <= HILBERT_VERIFY_MAX_N:
        raise UsageError(
            f"--n must be between 1 and {HILBERT_VERIFY_MAX_N} "
            "(enumeration cap; larger sizes are refused)"
        )
    cache = StructureConstantCache(args.cache_dir) if args.cache_dir else None
    report, elapsed = verify_main_theorem(args.n, mode=args.mode, cache=cache)
    checks = report["checks"]
    print(
        f"hilbert-verify n={args.n} mode={args.mode}: "
        f"{len(checks)} generator/basis checks, dims={report['dims']} "
        f"[{elapsed:.2f}s]"
    )
    for c in checks:
        if not c["pass"]:
            print(f"  FAIL k={c['k']} lambda={c['lambda']}")
            print(f"    lhs={c['lhs']}")
            print(f"    rhs={c['rhs']}")
    if "first_failure" in report:
        print(f"  smallest counterexample: {report['first_failure']}")
    print("PASS" if report["pass"] else "FAIL")
    _write_report(report, args.out)
    return 0 if report["pass"] else 1


def cmd_hilbert_table(args):
    if not 1 <= args.n_max <= HILBERT_TABLE_MAX_N:
        raise UsageError(f"--n-max must be between 1 and {HILBERT_TABLE_MAX_N}")
    lines = []
    for n in range(1, args.n_max + 1):
        dims = hilbert_series(n)
        lines.append("\t".join([str(n)] + [str(x) for x in dims]))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_spaltenstein_verify(args):
    data = _load_json_file(args.file)
    try:
        inst = SpaltensteinInstance.from_json(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if inst.n > SPALTENSTEIN_MAX_N:
        raise UsageError(f"instances beyond n={SPALTENSTEIN_MAX_N} are refused")
    report = verify_appendix_a(inst, dmax=args.dmax)
    print(
        f"spaltenstein-verify lambda={list(inst.lam)} mu={list(inst.mu)}: "
        f"dims={report['dims']}"
        + (" (unit ideal)" if report["unit_ideal"] else "")
    )
    if report["first_difference"] is not None:
        print(f"  ideals differ first at degree {report['first_difference']}")
    if not report["palindromic"]:
        print("  warning: quotient dimension vector is not palindromic")
    print("PASS" if report["pass"] else "FAIL")
    _write_report(report, args.out)
    return 0 if report["pass"] else 1


def cmd_hypertoric_verify(args):
    data = _load_json_file(args.file)
    try:
        cfg = VectorConfig.from_json(data)
        report = verify_appendix_b(cfg, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(
        f"hypertoric-verify n={cfg.n} d={cfg.d}: "
        f"dims={report.get('dims')} circuits={report.get('circuits')}"
    )
    if report.get("reason"):
        print(f"  {report['reason']}")
    if report.get("first_difference") is not None:
        print(f"  spans differ first at degree {report['first_difference']}")
    print("PASS" if report["pass"] else "FAIL")
    _write_report(report, args.out)
    return 0 if report["pass"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symring",
        description="Exact verification suites for graded ring isomorphisms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "hilbert-verify",
        help="check the fixed-ring / class-algebra correspondence at size n",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["oracle", "formula", "both"], default="both")
    p.add_argument("--out", help="write the JSON report to this file")
    p.add_argument("--cache-dir", help="structure-constant cache directory")
    p.set_defaults(func=cmd_hilbert_verify)

    p = sub.add_parser("hilbert-table", help="TSV of graded dimensions per n")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hilbert_table)

    p = sub.add_parser(
        "spaltenstein-verify", help="check slice-ideal equality for an instance file"
    )
    p.add_argument("--file", required=True)
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spaltenstein_verify)

    p = sub.add_parser(
        "hypertoric-verify", help="check the two quotient presentations for a config file"
    )
    p.add_argument("--file", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hypertoric_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
