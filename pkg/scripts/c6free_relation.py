"""Relate the parameters of a diamond-free graph to those of its bipartite build.

For each sampled diamond-free graph G this records the clique cover number
k(G), the independence number alpha(G), and chi_cd, omega_s and gamma_t of
the C6-free bipartite graph built from G, then tallies the offsets.
"""
from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from cdgraph.generators import random_diamond_free
from cdgraph.oracles import (
    cd_chromatic_exact,
    max_independent_set_exact,
    min_clique_cover_exact,
    separated_cluster_exact,
    total_domination_exact,
)
from cdgraph.recognition import C6_ONLY, find_induced_member
from cdgraph.reductions import build_c6free_bipartite


@dataclass
class Config:
    samples: int = 300
    max_n: int = 9
    max_build: int = 20
    seed: int = 0


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    offsets: Counter = Counter()
    done = 0
    while done < cfg.samples:
        g = random_diamond_free(rng.randint(1, cfg.max_n), rng.uniform(0.15, 0.75), rng)
        b = build_c6free_bipartite(g)
        if b.graph.n > cfg.max_build:
            continue
        done += 1
        assert find_induced_member(b.graph, C6_ONLY) is None
        k = min_clique_cover_exact(g)[0]
        alpha = max_independent_set_exact(g)[0]
        chi = cd_chromatic_exact(b.graph)[0]
        omega = separated_cluster_exact(b.graph)[0]
        gamma = total_domination_exact(b.graph)[0]
        offsets[(chi - k, omega - alpha, gamma - chi)] += 1
    return offsets


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})
    offsets = run(cfg)
    print("(chi_cd(B) - k(G), omega_s(B) - alpha(G), gamma_t(B) - chi_cd(B)) -> count")
    for key, count in sorted(offsets.items()):
        print(f"  {key}: {count}")


if __name__ == "__main__":
    main()
