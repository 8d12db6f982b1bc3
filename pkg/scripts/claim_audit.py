"""Census of the three-region split across the fixtures and a random corpus.

Prints, per network, the boundary values and how often the two claims about
the region after the latest path break.
"""

import argparse

from lexpath.corpus import FIXTURES, random_corpus
from lexpath.oracle import region_census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--cases", type=int, default=50)
    args = ap.parse_args()

    nets = [(name, make()) for name, make in FIXTURES.items()]
    nets += [(f"random-{i}", net) for i, net in enumerate(random_corpus(args.seed, args.cases))]
    broken_conn = broken_path = 0
    print(f"{'network':>12} {'m':>3} {'earliest':>8} {'latest':>7} {'last_dis':>8} "
          f"{'max_path':>8} {'dis_after':>9} {'path_after':>10}")
    for name, net in nets:
        r = region_census(net)
        v = r.violations
        broken_conn += v["disconnected_after_latest"] > 0
        broken_path += v["simple_path_after_latest"] > 0
        print(f"{name:>12} {net.m:>3} {r.earliest_value.value:>8} {r.latest_value.value:>7} "
              f"{r.last_disconnected_value.value:>8} {r.max_value_path_value.value:>8} "
              f"{v['disconnected_after_latest']:>9} {v['simple_path_after_latest']:>10}")
    print(f"\n{len(nets)} networks: after-latest connectivity broken on {broken_conn}, "
          f"after-latest no-simple-path broken on {broken_path}")


if __name__ == "__main__":
    main()
