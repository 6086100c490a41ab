"""Structural census of a graph: triangles, diamonds, K4s, and friends.

Everything the closed-form engine dispatches on lives here: the triangle
and diamond lists, the triangle-edge-deleted graph (written G- below),
maximal cliques, the exact edge clique cover number, vertex transitivity
and the block-level features used by the reductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import TooLarge, UnknownVertex
from .graphs import Edge, Graph, bits, connected_components, cut_vertices_and_blocks

__all__ = [
    "StructureReport",
    "census",
    "component_of_gminus",
    "triangle_edges",
    "maximal_cliques",
    "edge_clique_cover_number",
    "is_vertex_transitive",
    "pendant_vertices",
    "clique_leaf_blocks",
    "census_json",
]

THETA_CAP_DEFAULT = 12
TRANSITIVITY_CAP = 10


@dataclass(frozen=True)
class StructureReport:
    """Census record for one graph.

    ``g_minus`` is the input with every edge lying on a triangle deleted
    (same vertex set); ``g_minus_components`` partitions all vertices,
    singletons included.  A diamond is a 4-set inducing exactly five
    edges, recorded together with the edge its two triangles share.
    Diamond counting is of induced diamonds; under K4-freeness (where the
    bound machinery applies) induced and subgraph counts coincide, and
    ``has_k4`` flags when they might not.
    """

    graph: Graph
    t: int
    triangle_list: tuple[tuple[int, int, int], ...]
    d: int
    diamond_list: tuple[tuple[tuple[int, int, int, int], Edge], ...]
    has_k4: bool
    diamonds_edge_disjoint: bool
    g_minus: Graph
    g_minus_components: tuple[tuple[int, ...], ...]
    _component_index: dict[int, int] = field(repr=False, hash=False, compare=False, default_factory=dict)


def triangle_edges(graph: Graph) -> set[Edge]:
    """Edges lying on at least one triangle."""
    return {
        (u, v)
        for u, v in graph.edges
        if graph.adj[u] & graph.adj[v]
    }


def census(graph: Graph) -> StructureReport:
    triangles = []
    for u, v in graph.sorted_edges():
        both = graph.adj[u] & graph.adj[v]
        for w in bits(both):
            if w > v:
                triangles.append((u, v, w))
    triangles.sort()

    diamonds = []
    has_k4 = False
    for u, v in graph.sorted_edges():
        common = graph.adj[u] & graph.adj[v]
        shared = sorted(bits(common))
        for i, x in enumerate(shared):
            for y in shared[i + 1:]:
                if graph.has_edge(x, y):
                    has_k4 = True
                else:
                    diamonds.append((tuple(sorted((u, v, x, y))), (u, v)))
    diamonds.sort()

    diamond_edge_sets = []
    for (quad, (u, v)) in diamonds:
        others = [w for w in quad if w not in (u, v)]
        edges = {(u, v)}
        for w in others:
            edges.add(tuple(sorted((u, w))))
            edges.add(tuple(sorted((v, w))))
        diamond_edge_sets.append(edges)
    disjoint = True
    for i in range(len(diamond_edge_sets)):
        for j in range(i + 1, len(diamond_edge_sets)):
            if diamond_edge_sets[i] & diamond_edge_sets[j]:
                disjoint = False
                break
        if not disjoint:
            break

    g_minus = graph.without_edges(triangle_edges(graph))
    comps = tuple(tuple(c) for c in connected_components(g_minus))
    index = {}
    for k, comp in enumerate(comps):
        for v in comp:
            index[v] = k
    return StructureReport(
        graph=graph,
        t=len(triangles),
        triangle_list=tuple(triangles),
        d=len(diamonds),
        diamond_list=tuple(diamonds),
        has_k4=has_k4,
        diamonds_edge_disjoint=disjoint,
        g_minus=g_minus,
        g_minus_components=comps,
        _component_index=index,
    )


def component_of_gminus(report: StructureReport, v: int) -> tuple[int, ...]:
    """The component of the triangle-edge-deleted graph containing ``v``."""
    if v not in report._component_index:
        raise UnknownVertex(f"vertex {v} not in 0..{report.graph.n - 1}")
    return report.g_minus_components[report._component_index[v]]


def maximal_cliques(graph: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, list sorted lexicographically.

    Bron-Kerbosch with pivoting over bitmask vertex sets.  Isolated
    vertices come out as singleton cliques.
    """
    out: list[int] = []
    adj = graph.adj

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda v: (adj[v] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    if graph.n:
        expand(0, graph.vertex_mask(), 0)
    cliques = [tuple(bits(mask)) for mask in out]
    cliques.sort()
    return cliques


def _greedy_incompatible_matching(edges: list[Edge], graph: Graph) -> int:
    """Greedy count of edges pairwise sharing no clique (lower bound for covers).

    Two edges can lie in a common clique iff their four endpoints are
    pairwise adjacent; edges failing that for all chosen ones are added.
    """
    chosen: list[Edge] = []
    for e in edges:
        eu, ev = e
        ok = True
        for cu, cv in chosen:
            quad = {eu, ev, cu, cv}
            if graph.is_clique(sum(1 << q for q in quad)):
                ok = False
                break
        if ok:
            chosen.append(e)
    return len(chosen)


def edge_clique_cover_number(graph: Graph, cap: int = THETA_CAP_DEFAULT) -> int:
    """Exact minimum number of cliques covering every edge.

    Branch and bound: branch on the lexicographically smallest uncovered
    edge over the maximal cliques containing it (largest first), bounding
    below with a greedy set of pairwise clique-incompatible edges.
    """
    if graph.n > cap:
        raise TooLarge(f"edge clique cover solver capped at {cap} vertices (got {graph.n})")
    if graph.m == 0:
        return 0
    edge_list = graph.sorted_edges()
    edge_index = {e: i for i, e in enumerate(edge_list)}
    cliques = maximal_cliques(graph)
    clique_cover_masks: list[int] = []
    for clique in cliques:
        mask = 0
        for a, b in combinations(clique, 2):
            mask |= 1 << edge_index[(a, b)]
        clique_cover_masks.append(mask)
    by_edge: list[list[int]] = [[] for _ in edge_list]
    for cm, clique in zip(clique_cover_masks, cliques):
        for i in bits(cm):
            by_edge[i].append(cm)
    for i, options in enumerate(by_edge):
        options.sort(key=lambda m: (-m.bit_count(), m))

    full = (1 << len(edge_list)) - 1
    best = len(edge_list)  # one clique per edge always works

    def lower_bound(uncovered: int) -> int:
        remaining = [edge_list[i] for i in bits(uncovered)]
        return _greedy_incompatible_matching(remaining, graph)

    def search(uncovered: int, used: int) -> None:
        nonlocal best
        if uncovered == 0:
            best = min(best, used)
            return
        if used + lower_bound(uncovered) >= best:
            return
        first = (uncovered & -uncovered).bit_length() - 1
        for cm in by_edge[first]:
            search(uncovered & ~cm, used + 1)

    search(full, 0)
    return best


def _automorphism_exists(graph: Graph, image_of_zero: int) -> bool:
    """Backtracking search for an automorphism sending vertex 0 to the image."""
    n = graph.n
    degree = [graph.degree(v) for v in range(n)]
    if degree[0] != degree[image_of_zero]:
        return False
    mapping = [-1] * n
    used = [False] * n

    def assign(v: int, w: int) -> bool:
        if degree[v] != degree[w]:
            return False
        for u in range(n):
            if mapping[u] >= 0 and graph.has_edge(u, v) != graph.has_edge(mapping[u], w):
                return False
        return True

    def backtrack(v: int) -> bool:
        if v == n:
            return True
        if mapping[v] >= 0:
            return backtrack(v + 1)
        for w in range(n):
            if used[w] or not assign(v, w):
                continue
            mapping[v] = w
            used[w] = True
            if backtrack(v + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    mapping[0] = image_of_zero
    used[image_of_zero] = True
    return backtrack(1)


def is_vertex_transitive(graph: Graph, cap: int = TRANSITIVITY_CAP) -> bool:
    """Whether the automorphism group acts transitively on the vertices.

    Brute force over degree-compatible vertex maps; capped because this
    is only ever applied to small decomposition parts.
    """
    if graph.n > cap:
        raise TooLarge(f"vertex transitivity check capped at {cap} vertices (got {graph.n})")
    if graph.n <= 1:
        return True
    degs = {graph.degree(v) for v in range(graph.n)}
    if len(degs) > 1:
        return False
    return all(_automorphism_exists(graph, v) for v in range(1, graph.n))


def pendant_vertices(graph: Graph) -> set[int]:
    return {v for v in range(graph.n) if graph.degree(v) == 1}


def clique_leaf_blocks(graph: Graph) -> list[tuple[frozenset[Edge], int]]:
    """Blocks that are complete subgraphs containing exactly one cut vertex.

    Returns (block edge set, its cut vertex) pairs sorted by smallest
    block edge.  Deleting such a block's non-cut vertices preserves the
    phylogeny number, which is what the reduction engine exploits.
    """
    cut, blocks = cut_vertices_and_blocks(graph)
    out = []
    for block in blocks:
        vertices = set()
        for u, v in block:
            vertices.add(u)
            vertices.add(v)
        if len(block) != len(vertices) * (len(vertices) - 1) // 2:
            continue
        cut_inside = vertices & cut
        if len(cut_inside) == 1:
            out.append((block, next(iter(cut_inside))))
    out.sort(key=lambda pair: min(pair[0]))
    return out


def census_json(graph: Graph, theta_cap: int = THETA_CAP_DEFAULT) -> dict:
    """The census as a JSON-ready dict (the CLI's ``census`` payload)."""
    report = census(graph)
    payload = {
        "n": graph.n,
        "m": graph.m,
        "t": report.t,
        "d": report.d,
        "has_k4": report.has_k4,
        "diamonds_edge_disjoint": report.diamonds_edge_disjoint,
        "gminus_components": [list(c) for c in report.g_minus_components],
    }
    try:
        payload["theta_e"] = edge_clique_cover_number(graph, cap=theta_cap)
    except TooLarge:
        payload["theta_e"] = None
    return payload
