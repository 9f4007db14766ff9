"""Orbits of the twist automorphism on sampled basis elements of the w0 cell.

Prints, for each element, the least n <= --max-n with eta^n(x) = x, and
whether eta^6(x) equals the frozen-factor target q^e D_{w0, mu} x.

    python scripts/periodicity.py --type B2 --samples 10
"""

import argparse
import random

from qtwist.cells import periodicity_check, twist_auto
from qtwist.config import height_cap
from qtwist.invariants import SEED, sample_cell_elements
from qtwist.rootdata import cartan_type


def exact_period(x, max_n):
    y = x
    for n in range(1, max_n + 1):
        y = twist_auto(y)
        if y == x:
            return n
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="B2")
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--max-height", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    rd = cartan_type(args.type)
    xs = sample_cell_elements(rd, args.samples, random.Random(SEED), args.max_height)
    with height_cap(40):
        for x in xs:
            n = exact_period(x, args.max_n)
            target = periodicity_check(x, 6)["matches"]
            print(f"lam={x.lam} labels={[b.c for b in x.labels()]} period={n} "
                  f"eta6_matches_target={target}", flush=True)


if __name__ == "__main__":
    main()
