"""Per-check wall time of the verification registry, slowest first.

    python3 scripts/timing.py [--filter GLOB] [--jobs N] [--top K]
"""

import argparse
import time

from qg2.checks import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--filter", default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--top", type=int, default=15)
    args = ap.parse_args()
    t0 = time.perf_counter()
    report = run_suite(args.filter, args.jobs)
    wall = time.perf_counter() - t0
    rows = sorted(report.results, key=lambda r: -r.duration_ms)
    for r in rows[:args.top]:
        print(f"{r.duration_ms:8d} ms  {r.status:4}  {r.check_id}")
    groups = {}
    for r in report.results:
        key = r.check_id.split("/")[0].split("-")[0]
        groups[key] = groups.get(key, 0) + r.duration_ms
    print("by group:", ", ".join(f"{k} {v} ms" for k, v in sorted(groups.items())))
    print(f"{report.counts['pass']}/{report.counts['total']} passed, wall {wall:.1f} s "
          f"with {args.jobs} job(s)")


if __name__ == "__main__":
    main()
