"""Initial quantum seed of the w0 cell and the checks on each exchange.

    python scripts/cluster_exchange.py --type A3
"""

import argparse

from qtwist.cells import twist_auto
from qtwist.qcluster import compatibility_degrees, initial_seed, verify_exchange_in_algebra
from qtwist.rootdata import cartan_type, parse_word


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="A2")
    ap.add_argument("--word", help="1-based reduced word of w0")
    args = ap.parse_args()
    rd = cartan_type(args.type)
    word = parse_word(args.word) if args.word else rd.longest_word
    seed = initial_seed(rd.longest_element(), word)
    print("labels", list(seed.labels))
    print("lambda", [list(r) for r in seed.pair.lam])
    print("btilde", [list(r) for r in seed.pair.btilde])
    print("degrees", compatibility_degrees(seed.pair))
    for k in range(seed.exchangeable):
        r = verify_exchange_in_algebra(seed, k)
        flags = {key: v for key, v in r.items() if isinstance(v, bool)}
        print(f"exchange {k + 1}", flags)
    for s, x in zip(seed.labels, seed.realizations):
        print(f"eta({s}) has weight {twist_auto(x).weight}")


if __name__ == "__main__":
    main()
