"""How large must the weight range be for the crystalized Kumar-Peterson label set?

For each w in A2 the label set built from minors over lambda in
{varpi_1, varpi_2, rho, 2 rho, ..., k rho} is compared with the Demazure labels
B(U_q^-(w)) up to a height.  Labels whose epsilon exceeds every <lambda, h_i>
in the range are reported as missing.

    python scripts/kumar_peterson_range.py --height 4 --max-k 4
"""

import argparse
import time

from qtwist.config import height_cap
from qtwist.highest_weight import kumar_peterson_check
from qtwist.rootdata import cartan_type


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--height", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()
    rd = cartan_type("A2")
    for word in [(0,), (0, 1), (1, 0), (0, 1, 0)]:
        w = rd.element_from_word(word)
        for k in range(1, args.max_k + 1):
            lams = [(1, 0), (0, 1)] + [(j, j) for j in range(1, k + 1)]
            t = time.perf_counter()
            # module weights reach far past the label height for large lambda
            with height_cap(12 * k):
                r = kumar_peterson_check(w, lams, args.height)
            missing = sorted(b.c for b in r["missing"])
            print(f"w={[i + 1 for i in word]} k={k} equal={r['equal']} "
                  f"missing={missing} ({time.perf_counter() - t:.1f}s)", flush=True)
            if r["equal"]:
                break


if __name__ == "__main__":
    main()
