#!/usr/bin/env python3
"""Dump the g-, f- and h-tables for every composable pair at a fixed
level, as one JSON document.

Example:
    python3 scripts/dump_structure_tables.py --n 2 --r 2 --out tables.json
"""

import argparse
import itertools
import json
import sys

from affschur.affmat import enumerate_theta_band
from affschur import transfer


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--band", type=int, default=1)
    parser.add_argument(
        "--h-sigma-cap",
        type=int,
        default=2,
        help="skip h-tables whose stripped pair exceeds this total sigma",
    )
    parser.add_argument("--out", help="output path (default: stdout)")
    args = parser.parse_args()

    mats = enumerate_theta_band(args.n, args.r, args.band)
    out = {"n": args.n, "r": args.r, "band": args.band, "g": [], "h": []}
    stripped = set()
    for a, b in itertools.product(mats, mats):
        if a.co() != b.ro():
            continue
        out["g"].append(transfer.g_table(a, b, args.r).to_json())
        a0, ma = transfer.strip_E(a)
        b0, mb = transfer.strip_E(b)
        if (
            a0.sigma()
            and b0.sigma()
            and a0.is_aperiodic()
            and b0.is_aperiodic()
            and a0.sigma() % args.n == b0.sigma() % args.n
            and a0.sigma() + b0.sigma() <= args.h_sigma_cap
            and (a0, b0) not in stripped
        ):
            stripped.add((a0, b0))
            out["h"].append(transfer.h_constants(a0, b0).to_json())
    text = json.dumps(out, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
