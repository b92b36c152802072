#!/usr/bin/env python3
"""Run every verification suite and print a one-line summary per suite.

With --json the full reports are written to the given file.  Exits
nonzero when any suite reports a violation.
"""

import argparse
import json
import sys
import time

from affschur.verify import DRIVERS


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "targets",
        nargs="*",
        default=list(DRIVERS),
        help="suite names (default: all)",
    )
    parser.add_argument("--json", help="write full reports to this file")
    args = parser.parse_args()

    reports = []
    failed = False
    for name in args.targets or list(DRIVERS):
        if name not in DRIVERS:
            parser.error("unknown suite %r" % name)
        t0 = time.monotonic()
        report = DRIVERS[name]()
        elapsed = time.monotonic() - t0
        reports.append(report)
        status = "pass" if report["pass"] else "FAIL"
        print(
            "%-10s %s  %5d checks  %6.1fs"
            % (name, status, report["checked"], elapsed)
        )
        if not report["pass"]:
            failed = True
            for v in report["violations"][:3]:
                print("   ", json.dumps(v, sort_keys=True))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2, sort_keys=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
