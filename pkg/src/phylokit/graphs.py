"""Core graph and digraph value types plus the traversal utilities.

Vertices are dense integer ids ``0..n-1`` so adjacency can be kept in
per-vertex bitmasks (plain Python ints), which is what the exact solver
needs.  Both :class:`Graph` and :class:`Digraph` are immutable after
construction; every "mutation" builds a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CyclicDigraph, ParseError, UnknownVertex

__all__ = [
    "Graph",
    "Digraph",
    "VertexOrder",
    "bits",
    "is_acyclic",
    "acyclic_labeling",
    "connected_components",
    "cut_vertices_and_blocks",
    "arcs_between",
    "parse_graph",
    "parse_digraph",
    "format_graph",
    "format_digraph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "empty_graph",
    "grid_2xk",
    "disjoint_union",
]

Edge = tuple[int, int]
Arc = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``edges`` is a frozenset of ``(u, v)`` pairs with ``u < v``; ``adj[v]``
    is the neighbourhood of ``v`` as a bitmask.  ``labels``, when given,
    are display strings only and never affect any computation.
    """

    __slots__ = ("n", "edges", "labels", "adj")

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            e = _norm_edge(u, v)
            if e in norm:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            norm.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise ValueError("labels must match the vertex count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_clique(self, vertex_mask: int) -> bool:
        """True iff the vertices in ``vertex_mask`` are pairwise adjacent."""
        rest = vertex_mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if rest & ~self.adj[v]:
                return False
        return True

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """The subgraph induced on ``vertices``, relabelled densely.

        Returns the new graph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise UnknownVertex(f"vertex {v} not in 0..{self.n - 1}")
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep), edges), keep

    def without_edges(self, drop: Iterable[Edge]) -> "Graph":
        """Same vertex set with the given edges removed."""
        gone = {_norm_edge(u, v) for u, v in drop}
        return Graph(self.n, self.edges - gone, self.labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """A finite simple directed graph; arcs are ordered ``(tail, head)`` pairs.

    Acyclicity is a checked property (see :func:`is_acyclic`), never a
    construction invariant: the exact solver builds candidates one arc at
    a time and tests them.
    """

    __slots__ = ("n", "arcs", "labels", "out", "inn")

    def __init__(self, n: int, arcs: Iterable[Arc] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        out = [0] * n
        inn = [0] * n
        for t, h in arcs:
            if t == h:
                raise ValueError(f"self-loop at vertex {t}")
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"arc ({t},{h}) has an endpoint outside 0..{n - 1}")
            if (t, h) in seen:
                raise ValueError(f"duplicate arc ({t},{h})")
            seen.add((t, h))
            out[t] |= 1 << h
            inn[h] |= 1 << t
        if labels is not None and len(labels) != n:
            raise ValueError("labels must match the vertex count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(seen))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "out", tuple(out))
        object.__setattr__(self, "inn", tuple(inn))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, t: int, h: int) -> bool:
        return (t, h) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.inn[v]))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def with_arcs(self, extra: Iterable[Arc]) -> "Digraph":
        return Digraph(self.n, list(self.arcs) + list(extra), self.labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.m})"


@dataclass(frozen=True)
class VertexOrder:
    """A bijection from vertices to ``1..n``.

    When produced by :func:`acyclic_labeling` it satisfies
    ``value_of(tail) > value_of(head)`` for every arc.
    """

    values: tuple[int, ...]

    def value_of(self, v: int) -> int:
        return self.values[v]

    def respects(self, digraph: Digraph) -> bool:
        return all(self.values[t] > self.values[h] for t, h in digraph.arcs)


def is_acyclic(digraph: Digraph) -> bool:
    """True iff the digraph has no directed cycle."""
    indeg = [digraph.inn[v].bit_count() for v in range(digraph.n)]
    queue = [v for v in range(digraph.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in bits(digraph.out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == digraph.n


def acyclic_labeling(digraph: Digraph) -> VertexOrder:
    """A labeling with every arc's tail numbered above its head.

    Values ``1..n`` are assigned in increasing order, each time to the
    smallest-id vertex all of whose out-neighbors are already numbered.
    That tie-break makes the result unique, hence reproducible.
    """
    n = digraph.n
    values = [0] * n
    remaining_out = list(digraph.out)
    unnumbered = set(range(n))
    for value in range(1, n + 1):
        ready = [v for v in unnumbered if remaining_out[v] == 0]
        if not ready:
            raise CyclicDigraph("digraph has a directed cycle")
        v = min(ready)
        values[v] = value
        unnumbered.remove(v)
        gone = 1 << v
        for u in unnumbered:
            remaining_out[u] &= ~gone
    return VertexOrder(tuple(values))


def connected_components(graph: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, ordered by their minimum member."""
    unseen = graph.vertex_mask()
    components = []
    while unseen:
        start = unseen & -unseen
        frontier = start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= graph.adj[v]
            frontier = nxt & ~comp
        components.append(sorted(bits(comp)))
        unseen &= ~comp
    return components


def cut_vertices_and_blocks(graph: Graph) -> tuple[set[int], list[frozenset[Edge]]]:
    """Biconnected decomposition: (cut vertices, blocks as edge sets).

    Every edge lands in exactly one block; a vertex is a cut vertex iff
    it lies in at least two blocks.  Iterative Hopcroft-Tarjan, so deep
    paths do not hit the recursion limit.  Blocks are returned sorted by
    their smallest edge.
    """
    n = graph.n
    visited = [False] * n
    discovery = [0] * n
    low = [0] * n
    cut: set[int] = set()
    blocks: list[frozenset[Edge]] = []
    timer = 0

    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        discovery[root] = low[root] = timer = timer + 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(graph.neighbors(root)))]
        while stack:
            v, parent, children = stack[-1]
            advanced = False
            for w in children:
                if w == parent:
                    continue
                if visited[w]:
                    if discovery[w] < discovery[v]:
                        low[v] = min(low[v], discovery[w])
                        edge_stack.append(_norm_edge(v, w))
                    continue
                visited[w] = True
                timer += 1
                discovery[w] = low[w] = timer
                edge_stack.append(_norm_edge(v, w))
                stack.append((w, v, iter(graph.neighbors(w))))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                if root_children > 1:
                    cut.add(root)
                continue
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            if low[v] >= discovery[parent]:
                if parent != root:
                    cut.add(parent)
                marker = _norm_edge(parent, v)
                idx = len(edge_stack) - 1 - edge_stack[::-1].index(marker)
                blocks.append(frozenset(edge_stack[idx:]))
                del edge_stack[idx:]
    blocks.sort(key=lambda b: min(b))
    return cut, blocks


def arcs_between(digraph: Digraph, tails: Iterable[int], heads: Iterable[int]) -> set[Arc]:
    """Arcs with tail in ``tails`` and head in ``heads``."""
    tail_set = set(tails)
    head_set = set(heads)
    for v in tail_set | head_set:
        if not 0 <= v < digraph.n:
            raise UnknownVertex(f"vertex {v} not in 0..{digraph.n - 1}")
    return {(t, h) for (t, h) in digraph.arcs if t in tail_set and h in head_set}


# ---------------------------------------------------------------------------
# Edge-list text format, shared by every module and the CLI.
#
# First non-comment line: "n m"; then m lines "u v" with 0-based ids.
# A '#' at the start of a (stripped) line begins a comment line.  For a
# digraph each "u v" line is the arc u->v.


def _parse_pairs(text: str, directed: bool) -> tuple[int, list[tuple[int, int]]]:
    lines = [
        stripped
        for raw in text.splitlines()
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    if not lines:
        raise ParseError("empty input: expected a leading 'n m' line")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m' on the first line, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ParseError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} pair lines, found {len(body)}")
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"non-integer pair {line!r}") from exc
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"pair ({u},{v}) outside 0..{n - 1}")
        key = (u, v) if directed else _norm_edge(u, v)
        if key in seen:
            raise ParseError(f"duplicate {'arc' if directed else 'edge'} ({u},{v})")
        seen.add(key)
        pairs.append((u, v))
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = _parse_pairs(text, directed=False)
    return Graph(n, pairs)


def parse_digraph(text: str) -> Digraph:
    n, pairs = _parse_pairs(text, directed=True)
    return Digraph(n, pairs)


def format_graph(graph: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def format_digraph(digraph: Digraph, comment: str | None = None, trailing: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"{digraph.n} {digraph.m}")
    lines.extend(f"{t} {h}" for t, h in digraph.sorted_arcs())
    if trailing:
        lines.append(f"# {trailing}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Small builders used throughout the tests, demos and the family generator.


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def grid_2xk(k: int) -> Graph:
    """The 2-by-k grid (ladder): vertices ``(row, col) -> 2*col + row``."""
    if k < 1:
        raise ValueError("the grid needs at least one column")
    edges = []
    for col in range(k):
        edges.append((2 * col, 2 * col + 1))
        if col + 1 < k:
            edges.append((2 * col, 2 * col + 2))
            edges.append((2 * col + 1, 2 * col + 3))
    return Graph(2 * k, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.sorted_edges())
        offset += g.n
    return Graph(offset, edges)
