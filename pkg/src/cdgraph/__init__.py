"""Class-domination coloring, total domination and separated clusters."""
from .graph import Bipartition, Graph, aux_graph, complement, parse_edge_list, square, to_edge_list
from .oracles import (
    CdColoring,
    SeparatedCluster,
    TotalDominatingSet,
    cd_chromatic_exact,
    max_independent_set_exact,
    min_clique_cover_exact,
    separated_cluster_exact,
    total_domination_exact,
    verify_cd_coloring,
    verify_separated_cluster,
    verify_total_dominating,
)

__version__ = "0.1.0"
