"""Exact phylogeny and competition numbers of small graphs.

The exact solver searches head assignments: every vertex owns the
clique of its in-neighbors, every extra vertex owns one clique, the
member-to-head relation must stay acyclic, and together the cliques
must cover every edge.  Deepening on the number of extras makes the
first success minimal.  A dumber brute-force oracle double-checks it.
"""

from phylokit import (
    competition_number_exact,
    figure_catalog,
    oracle_phylogeny_number,
    phylogeny_number_exact,
)
from phylokit.graphs import complete_graph, cycle_graph

samples = [
    ("complete graph K5", complete_graph(5)),
    ("four-cycle", cycle_graph(4)),
    ("six-cycle", cycle_graph(6)),
    ("2x3 grid", figure_catalog("fig2_G")),
    ("square with pendant triangle", figure_catalog("fig1_G")),
    ("triangle-diamond chain", figure_catalog("fig3_G2")),
]

print(f"{'graph':<30} {'p':>3} {'oracle':>7} {'k':>3}")
for name, g in samples:
    result = phylogeny_number_exact(g)
    try:
        oracle = oracle_phylogeny_number(g, 3) if g.n <= 7 else "-"
    except Exception:
        oracle = ">3"
    k = competition_number_exact(g)
    print(f"{name:<30} {result.value:>3} {str(oracle):>7} {k:>3}")

print()
g = figure_catalog("fig2_G")
result = phylogeny_number_exact(g)
print(f"witness for the 2x3 grid (p = {result.value}):")
print("  arcs:", result.witness.digraph.sorted_arcs())
print("  extra vertices:", result.witness.extras)
print("the two extras each take care of one independent cycle of the grid")
