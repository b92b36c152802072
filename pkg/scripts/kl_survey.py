#!/usr/bin/env python3
"""Survey Kazhdan-Lusztig polynomials up to a length bound.

Prints every nontrivial P_{y,w} (those different from 0 and 1) found
while expanding C'_w for all w of length at most --max-length, and a
count of how many pairs were trivial.
"""

import argparse
import sys

from affschur.affweyl import AffPerm, enumerate_wr
from affschur.heckekl import KLCache, cprime


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=3)
    parser.add_argument("--max-length", type=int, default=6)
    parser.add_argument("--cache", help="persist the KL table here")
    args = parser.parse_args()

    cache = KLCache(args.cache)
    for layer in enumerate_wr(args.r, args.max_length):
        for w in sorted(layer, key=lambda x: x.window):
            cprime(w, cache)
    trivial = 0
    for (r, ywin, wwin), p in sorted(cache.p_table.items()):
        if p.degree() <= 0:
            trivial += 1
            continue
        print(
            "P[%s <= %s] = %r (lengths %d, %d)"
            % (
                ",".join(map(str, ywin)),
                ",".join(map(str, wwin)),
                p,
                AffPerm(ywin).length(),
                AffPerm(wwin).length(),
            )
        )
    print("trivial pairs:", trivial)
    if args.cache:
        cache.save()
    return 0


if __name__ == "__main__":
    sys.exit(main())
