#!/usr/bin/env python3
"""Run every verified statement against every builtin context.

The scaled-form criterion only applies to scalar-form documents, so it is
skipped elsewhere. Exit status is nonzero if any check fails.
"""

from __future__ import annotations

import argparse
import sys
import time

from moritactx import CHECK_TOKENS, battery_names, builtin_context, run_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--only", metavar="TOKEN", choices=CHECK_TOKENS,
                        help="run a single check token instead of all of them")
    parser.add_argument("--verbose", action="store_true",
                        help="print the detail lines of every check")
    args = parser.parse_args()

    tokens = (args.only,) if args.only else CHECK_TOKENS
    failures = 0
    started = time.time()
    for name in battery_names():
        res = builtin_context(name)
        for token in tokens:
            if token == "ks" and res.document.scalar is None:
                continue
            t0 = time.time()
            result = run_check(token, res)
            status = "PASS" if result.passed else "FAIL"
            print(f"{name:14s} {token:5s} {status}  ({time.time() - t0:5.1f}s)")
            if args.verbose or not result.passed:
                for line in result.lines:
                    print(f"    {line}")
            failures += not result.passed
    print(f"total: {time.time() - started:.1f}s, failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
