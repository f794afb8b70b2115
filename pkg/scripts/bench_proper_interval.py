"""Time the auxiliary-graph plus matching route on random proper interval graphs.

The clique cover of the auxiliary graph is timed on every instance; the
lift to a cd-coloring needs a graph without isolated vertices, so it is
only timed when the sample has none.
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from cdgraph.generators import random_proper_interval_rep
from cdgraph.graph import aux_graph
from cdgraph.intervalrep import intersection_graph
from cdgraph.poly import aux_clique_cover, cover_to_coloring


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [250, 500, 1000, 2000, 4000, 8000])
    avg_degree: float = 6.0
    repeats: int = 3
    seed: int = 1


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+")
    p.add_argument("--avg-degree", type=float)
    p.add_argument("--repeats", type=int)
    p.add_argument("--seed", type=int)
    args = p.parse_args()
    cfg = Config()
    for k, v in vars(args).items():
        if v is not None:
            setattr(cfg, k, v)
    rng = random.Random(cfg.seed)
    print(f"{'n':>6} {'m':>7} {'aux m':>7} {'aux s':>7} {'cover s':>8} {'cliques':>8} {'lift s':>7} strategy")
    for n in cfg.sizes:
        for _ in range(cfg.repeats):
            g = intersection_graph(random_proper_interval_rep(n, rng, cfg.avg_degree))
            t0 = time.perf_counter()
            gs = aux_graph(g)
            t1 = time.perf_counter()
            cover, strategy = aux_clique_cover(gs)
            t2 = time.perf_counter()
            lift = "-"
            if all(g.adj):
                cover_to_coloring(g, cover)
                lift = f"{time.perf_counter() - t2:.3f}"
            print(f"{n:>6} {g.m:>7} {gs.m:>7} {t1 - t0:>7.3f} {t2 - t1:>8.3f} {len(cover):>8} {lift:>7} {strategy}")


if __name__ == "__main__":
    main()
