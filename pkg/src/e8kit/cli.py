"""Command-line driver: run verification suites, write the dimension ledger,
emit structure-constant files.

Exit codes: 0 all checks pass, 1 any check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .suites import (EMIT_SELECTORS, SUITE_NAMES, emit_structure_constants,
                     run_suite, write_ledger)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="e8kit",
        description="exact verification suites for the 248-dimensional "
                    "exceptional algebra and its involution fixed points")
    sub = ap.add_subparsers(dest="command", required=True)

    p_suite = sub.add_parser("suite", help="run a named verification suite")
    p_suite.add_argument("name", choices=SUITE_NAMES)
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--threads", type=int, default=1)
    p_suite.add_argument("--out", default=None, help="write the JSON report here")

    p_emit = sub.add_parser("emit", help="emit structure constants")
    p_emit.add_argument("selector", choices=EMIT_SELECTORS)
    p_emit.add_argument("--out", required=True)

    p_ledger = sub.add_parser("ledger", help="write the dimension ledger")
    p_ledger.add_argument("--out", default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "suite":
            t0 = time.time()
            report = run_suite(args.name, seed=args.seed, threads=args.threads,
                               out_path=args.out)
            for c in report.checks:
                print("%-4s %s" % (c.status.upper(), c.id))
            print("suite %s: %s (%d checks, %.1fs)"
                  % (report.suite, report.overall, len(report.checks),
                     time.time() - t0), file=sys.stderr)
            return 0 if report.overall == "pass" else 1
        if args.command == "emit":
            emit_structure_constants(args.selector, args.out)
            print("wrote %s" % args.out, file=sys.stderr)
            return 0
        if args.command == "ledger":
            payload = write_ledger(args.out)
            for e in payload["entries"]:
                status = "PASS" if e["expected"] == e["computed"] else "FAIL"
                print("%-4s %-18s expected %3d computed %3d"
                      % (status, e["claim_id"], e["expected"], e["computed"]))
            return 0 if payload["overall"] == "pass" else 1
    except (OSError, KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
