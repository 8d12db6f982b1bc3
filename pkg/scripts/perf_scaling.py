"""Time earliest_path on seeded random connected graphs of growing size.

    python scripts/perf_scaling.py --n 10000 --m 50000 100000 200000
"""

import argparse
import random
import statistics
import time

from lexpath.corpus import random_connected
from lexpath.pathfind import earliest_path, latest_path


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--m", type=int, nargs="+", default=[25_000, 50_000, 100_000])
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"{'m':>8} {'earliest_s':>11} {'latest_s':>9} {'hops':>5} {'weight_bits':>12}")
    for m in args.m:
        net = random_connected(random.Random(args.seed), args.n, m)
        row = []
        for finder in (earliest_path, latest_path):
            times = []
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                path = finder(net)
                times.append(time.perf_counter() - t0)
            row.append(statistics.median(times))
        path = earliest_path(net)
        print(f"{m:>8} {row[0]:>11.3f} {row[1]:>9.3f} {len(path.arc_ids):>5} "
              f"{path.weight.value.bit_length():>12}")


if __name__ == "__main__":
    main()
