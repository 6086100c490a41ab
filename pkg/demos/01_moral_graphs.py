"""From digraphs to phylogeny (moral) graphs, and what certifies what.

The phylogeny graph P(D) of an acyclic digraph D keeps every arc as an
edge and marries every two vertices that point at a common head.  A
digraph D "certifies" a graph G when P(D) contains G as an induced
subgraph on a chosen base set and no arc enters the base from outside;
the extra vertices beyond the base are the price paid.
"""

from phylokit import (
    cared_edges,
    competition_graph,
    figure_catalog,
    phylogeny_graph,
    underlying_graph,
    validate_phylogeny_digraph,
)
from phylokit.derived import certificate_to_dot

graph = figure_catalog("fig1_G")
digraph, base = figure_catalog("fig1_D")

print("target graph:", graph, "edges:", graph.sorted_edges())
print("candidate digraph:", digraph, "arcs:", digraph.sorted_arcs())
print()

print("underlying edges: ", underlying_graph(digraph).sorted_edges())
print("competition edges:", competition_graph(digraph).sorted_edges())
print("phylogeny edges:  ", phylogeny_graph(digraph).sorted_edges())
print()

certificate = validate_phylogeny_digraph(digraph, base, graph)
print(f"valid certificate with {certificate.extra_count} extra vertex: {certificate.extras}")

print("\nedges realized only through a common head (cared edges):")
for edge, carers in cared_edges(digraph, base).items():
    print(f"  {edge} cared for by {sorted(carers)}")

print("\nDOT rendering (base as circles, extras as boxes):\n")
print(certificate_to_dot(digraph, base))
