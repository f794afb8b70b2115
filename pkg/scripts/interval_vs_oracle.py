"""Cross-check the interval separated-cluster algorithm against the exact oracle."""
from __future__ import annotations

import argparse
import random
import time
from collections import defaultdict
from dataclasses import dataclass

from cdgraph.generators import random_interval_rep
from cdgraph.interval import separated_cluster_interval
from cdgraph.intervalrep import intersection_graph
from cdgraph.oracles import separated_cluster_exact


@dataclass
class Config:
    samples: int = 2000
    max_n: int = 18
    seed: int = 3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(p.parse_args()))
    rng = random.Random(cfg.seed)
    per_n: dict[int, list[float]] = defaultdict(lambda: [0, 0, 0.0, 0.0])
    for _ in range(cfg.samples):
        n = rng.randint(1, cfg.max_n)
        rep = random_interval_rep(n, rng)
        g = intersection_graph(rep)
        t0 = time.perf_counter()
        fast = separated_cluster_interval(g, rep).size
        t1 = time.perf_counter()
        slow = separated_cluster_exact(g)[0]
        t2 = time.perf_counter()
        row = per_n[n]
        row[0] += 1
        row[1] += fast != slow
        row[2] += t1 - t0
        row[3] += t2 - t1
    print(f"{'n':>3} {'runs':>5} {'mismatch':>8} {'interval ms':>11} {'oracle ms':>10}")
    for n in sorted(per_n):
        runs, bad, ti, to = per_n[n]
        print(f"{n:>3} {runs:>5} {bad:>8} {1e3 * ti / runs:>11.3f} {1e3 * to / runs:>10.3f}")


if __name__ == "__main__":
    main()
