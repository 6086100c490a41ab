"""Exhaustive small-graph enumeration, canonical forms and graph6 I/O.

The sweep commands consume either the native generator below or an
externally produced graph6 stream, so results can be reproduced against
standard tooling without depending on it.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ParseError, TooLarge
from .graphs import Graph, bits

__all__ = [
    "graph6_encode",
    "graph6_decode",
    "canonical_labeling",
    "canonical_graph",
    "canonical_graph6",
    "connected_graphs",
    "connected_graphs_upto",
    "all_digraph_arc_sets",
]

GENERATOR_CAP = 8


def graph6_encode(graph: Graph) -> str:
    """Standard graph6 line (no header) for up to 62 vertices."""
    n = graph.n
    if n > 62:
        raise TooLarge("graph6 writer limited to 62 vertices")
    chars = [chr(n + 63)]
    bitstring = []
    for j in range(1, n):
        for i in range(j):
            bitstring.append(1 if graph.has_edge(i, j) else 0)
    while len(bitstring) % 6:
        bitstring.append(0)
    for k in range(0, len(bitstring), 6):
        value = 0
        for b in bitstring[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def graph6_decode(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ParseError("empty graph6 line")
    first = ord(text[0]) - 63
    if first < 0 or first > 62:
        raise ParseError("only graph6 lines with at most 62 vertices are supported")
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    data = text[1:]
    if len(data) != need:
        raise ParseError(f"graph6 line for n={n} needs {need} data characters, got {len(data)}")
    bitstring = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise ParseError(f"invalid graph6 character {ch!r}")
        bitstring.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Canonical labeling: color refinement plus individualization, with twin
# skipping so cliques and other twin-heavy graphs do not blow up.  Small-n
# only, which is all the sweeps need.


def _refine(adj: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    stable = False
    while not stable:
        stable = True
        for splitter_index in range(len(partition)):
            splitter_mask = 0
            for v in partition[splitter_index]:
                splitter_mask |= 1 << v
            new_partition: list[list[int]] = []
            split_here = False
            for cell in partition:
                if len(cell) == 1:
                    new_partition.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter_mask).bit_count(), []).append(v)
                if len(groups) > 1:
                    split_here = True
                for key in sorted(groups):
                    new_partition.append(groups[key])
            if split_here:
                partition = new_partition
                stable = False
                break
    return partition


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))


def canonical_labeling(graph: Graph) -> tuple[int, ...]:
    """A vertex order whose relabelled adjacency code is minimal.

    Returns ``order`` with ``order[i]`` = original vertex placed at i.
    Deterministic, so equal codes mean isomorphic graphs and vice versa
    within the generator's size range.
    """
    n = graph.n
    if n == 0:
        return ()
    adj = graph.adj
    best: list[int] | None = None
    best_order: tuple[int, ...] | None = None

    def code_of(order: list[int]) -> list[int]:
        code = []
        for j in range(1, n):
            oj = order[j]
            for i in range(j):
                code.append(1 if (adj[order[i]] >> oj) & 1 else 0)
        return code

    def search(partition: list[list[int]]) -> None:
        nonlocal best, best_order
        partition = _refine(adj, partition)
        target = next((i for i, cell in enumerate(partition) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in partition]
            code = code_of(order)
            if best is None or code < best:
                best = code
                best_order = tuple(order)
            return
        cell = partition[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(partition[:target] + [[v], rest] + partition[target + 1:])

    search([list(range(n))])
    assert best_order is not None
    return best_order


def canonical_graph(graph: Graph) -> Graph:
    order = canonical_labeling(graph)
    position = {old: new for new, old in enumerate(order)}
    return Graph(graph.n, [(position[u], position[v]) for u, v in graph.edges])


def canonical_graph6(graph: Graph) -> str:
    return graph6_encode(canonical_graph(graph))


def connected_graphs(n: int, cap: int = GENERATOR_CAP) -> list[Graph]:
    """All connected graphs on exactly n vertices, one per isomorphism class.

    Built level by level: every connected graph on k+1 vertices arises
    from a connected graph on k vertices by adding one vertex joined to a
    nonempty subset (every graph keeps at least two non-cut vertices, so
    deleting one of them shows the converse).  Returned in canonical-code
    order, each graph canonically labelled.
    """
    if n > cap:
        raise TooLarge(f"generator capped at {cap} vertices (got {n})")
    if n < 1:
        return []
    level: dict[str, Graph] = {}
    single = Graph(1)
    level[graph6_encode(single)] = single
    for k in range(1, n):
        bigger: dict[str, Graph] = {}
        for g in level.values():
            base_edges = list(g.edges)
            for subset in range(1, 1 << k):
                edges = base_edges + [(v, k) for v in bits(subset)]
                candidate = canonical_graph(Graph(k + 1, edges))
                bigger.setdefault(graph6_encode(candidate), candidate)
        level = bigger
    return [level[key] for key in sorted(level)]


def connected_graphs_upto(n_max: int, cap: int = GENERATOR_CAP) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from connected_graphs(n, cap=cap)


def all_digraph_arc_sets(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every simple digraph arc set on n vertices (exhaustive test helper)."""
    pairs = [(t, h) for t in range(n) for h in range(n) if t != h]
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in bits(mask)]
