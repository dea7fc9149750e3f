"""Run the e-side Serre completion at increasing degree bounds.

Prints the number of rules per leading-word degree and checks, for every
weight of degree <= D, that irreducible words are counted by the Kostant
partition function of the G2 positive roots.

    python3 scripts/serre_stabilization.py --max-degree 11
"""

import argparse
import itertools
import time
from functools import lru_cache

from qg2.free import E1, E2
from qg2.params import SOURCE
from qg2.rewrite import serre_complete

POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))


@lru_cache(maxsize=None)
def kostant(a: int, b: int, k: int = 0) -> int:
    if (a, b) == (0, 0):
        return 1
    if a < 0 or b < 0 or k == len(POSITIVE_ROOTS):
        return 0
    ra, rb = POSITIVE_ROOTS[k]
    return kostant(a, b, k + 1) + kostant(a - ra, b - rb, k)


def irreducible_counts(rules, D):
    counts = {}
    for n in range(D + 1):
        for word in itertools.product((E1, E2), repeat=n):
            if not any(word[i:i + len(r.lead)] == r.lead
                       for r in rules.rules for i in range(n - len(r.lead) + 1)):
                key = (word.count(E1), word.count(E2))
                counts[key] = counts.get(key, 0) + 1
    return counts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-degree", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=10)
    args = ap.parse_args()
    for D in range(args.min_degree, args.max_degree + 1):
        t0 = time.perf_counter()
        rules = serre_complete(SOURCE.serre_e, D, names=("G5_1", "G5_2"))
        per_degree = {}
        for r in rules.rules:
            per_degree[len(r.lead)] = per_degree.get(len(r.lead), 0) + 1
        counts = irreducible_counts(rules, D)
        bad = [w for w, c in counts.items() if c != kostant(*w)]
        print(f"D={D:2}  rules={len(rules.rules):3}  per degree {dict(sorted(per_degree.items()))}"
              f"  PBW count {'ok' if not bad else 'MISMATCH ' + str(bad)}"
              f"  {time.perf_counter() - t0:.1f} s", flush=True)


if __name__ == "__main__":
    main()
