"""Certificate sizes of the d-regular gap family next to the closed-form counts."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from cdgraph.oracles import verify_cd_coloring, verify_total_dominating
from cdgraph.reductions import gap_family


@dataclass
class Config:
    cases: list[tuple[int, int]] = field(default_factory=lambda: [
        (10, 3), (12, 3), (10, 4), (12, 4), (10, 5), (12, 5), (12, 6), (16, 6), (16, 7), (20, 8)])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--case", action="append", metavar="N,D", help="override the default (n, d) list")
    args = p.parse_args()
    cfg = Config()
    if args.case:
        cfg.cases = [tuple(int(x) for x in c.split(",")) for c in args.case]
    print(f"{'n':>4} {'d':>3} {'|V|':>6} {'classes':>8} {'stated':>7} {'tds':>5} {'stated':>7} {'gap':>5} ok")
    for n, d in cfg.cases:
        out = gap_family(n, d)
        k, t = out.coloring_cert.k, len(out.tds_cert)
        ok = bool(verify_cd_coloring(out.graph, out.coloring_cert)) and \
            bool(verify_total_dominating(out.graph, out.tds_cert.vertices))
        print(f"{n:>4} {d:>3} {out.graph.n:>6} {k:>8} {out.stated_classes:>7} {t:>5} "
              f"{out.stated_tds:>7} {k - t:>5} {ok}")


if __name__ == "__main__":
    main()
