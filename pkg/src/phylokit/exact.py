"""Exact solvers: phylogeny number, its brute-force oracle, competition number.

A phylogeny digraph with all extra vertices normalized to sinks is fully
described by in-neighborhoods: each base vertex w takes a set M(w) of
base in-neighbors with M(w) + w a clique of the target, each extra takes
one clique.  An edge is realized iff it lies inside some M(w) + w or
inside an extra's clique, and the member->head relation on base vertices
must be acyclic.  The solver searches those assignments directly,
deepening on the number of extras, so the first success is minimal.
"""

from __future__ import annotations

import time
from itertools import combinations

from .derived import PhyloCertificate, validate_phylogeny_digraph
from .errors import Infeasible, TooLarge
from .graphs import Digraph, Graph, bits, connected_components
from .results import PhyloResult
from .structure import edge_clique_cover_number, maximal_cliques, triangle_edges

__all__ = [
    "SOLVER_CAP_DEFAULT",
    "phylogeny_number_exact",
    "oracle_phylogeny_number",
    "competition_number_exact",
]

SOLVER_CAP_DEFAULT = 12
ORACLE_VERTEX_CAP = 7
ORACLE_EXTRA_CAP = 3


class _EdgeCoverState:
    """Shared bookkeeping for the edge-driven searches."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.edge_list = graph.sorted_edges()
        self.edge_index = {e: i for i, e in enumerate(self.edge_list)}
        self.all_covered = (1 << len(self.edge_list)) - 1
        self._pairs_cache: dict[int, int] = {}
        by_edge: list[list[int]] = [[] for _ in self.edge_list]
        for clique in maximal_cliques(graph):
            if len(clique) < 2:
                continue
            cmask = 0
            for v in clique:
                cmask |= 1 << v
            for a, b in combinations(clique, 2):
                by_edge[self.edge_index[(a, b)]].append(cmask)
        for options in by_edge:
            options.sort(key=lambda m: (-m.bit_count(), m))
        self.max_cliques_by_edge = by_edge

    def pairs_mask(self, vertex_mask: int) -> int:
        """Edge-index mask of all target edges inside a vertex mask."""
        cached = self._pairs_cache.get(vertex_mask)
        if cached is not None:
            return cached
        acc = 0
        members = list(bits(vertex_mask))
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                idx = self.edge_index.get((a, b))
                if idx is not None:
                    acc |= 1 << idx
        self._pairs_cache[vertex_mask] = acc
        return acc

    def reaches(self, start: int, targets: int, out_mask: list[int]) -> bool:
        """True iff some target vertex is reachable from start along arcs."""
        seen = 0
        frontier = out_mask[start]
        while frontier:
            if frontier & targets:
                return True
            seen |= frontier
            nxt = 0
            for a in bits(frontier):
                nxt |= out_mask[a]
            frontier = nxt & ~seen
        return False


class _PhyloSearch(_EdgeCoverState):
    """Depth-first feasibility search for a fixed extra-vertex budget.

    Branches on the lexicographically smallest uncovered edge: every base
    head (ascending id, extending its in-neighborhood by just the edge's
    endpoints), then a fresh extra per maximal clique containing the edge
    (largest clique first).  Completeness: any valid assignment can be
    replayed through these moves edge by edge.
    """

    def __init__(self, graph: Graph):
        super().__init__(graph)
        self.in_mask = [0] * self.n
        self.out_mask = [0] * self.n
        self.extras: list[int] = []
        self.budget = 0

    def run(self, budget: int) -> bool:
        self.in_mask = [0] * self.n
        self.out_mask = [0] * self.n
        self.extras = []
        self.budget = budget
        return self._dfs(0)

    def _dfs(self, covered: int) -> bool:
        if covered == self.all_covered:
            return True
        remaining = self.all_covered & ~covered
        ei = (remaining & -remaining).bit_length() - 1
        u, v = self.edge_list[ei]
        euv = (1 << u) | (1 << v)
        for h in range(self.n):
            hb = 1 << h
            add = euv & ~hb
            new_tails = add & ~self.in_mask[h]
            if new_tails == 0:
                continue
            closed = self.in_mask[h] | add | hb
            if not self.graph.is_clique(closed):
                continue
            if self.reaches(h, new_tails, self.out_mask):
                continue
            saved = self.in_mask[h]
            self.in_mask[h] = saved | add
            for a in bits(new_tails):
                self.out_mask[a] |= hb
            if self._dfs(covered | self.pairs_mask(closed)):
                return True
            self.in_mask[h] = saved
            for a in bits(new_tails):
                self.out_mask[a] &= ~hb
        if len(self.extras) < self.budget:
            for cmask in self.max_cliques_by_edge[ei]:
                self.extras.append(cmask)
                if self._dfs(covered | self.pairs_mask(cmask)):
                    return True
                self.extras.pop()
        return False

    def certificate(self) -> PhyloCertificate:
        arcs = []
        for w in range(self.n):
            arcs.extend((a, w) for a in bits(self.in_mask[w]))
        for i, cmask in enumerate(self.extras):
            arcs.extend((s, self.n + i) for s in bits(cmask))
        digraph = Digraph(self.n + len(self.extras), arcs)
        return validate_phylogeny_digraph(digraph, range(self.n), self.graph)


def phylogeny_number_exact(
    graph: Graph,
    cap: int = SOLVER_CAP_DEFAULT,
    want_witness: bool = True,
    max_extras: int | None = None,
    deadline: float | None = None,
) -> PhyloResult:
    """Minimum number of extra vertices over all phylogeny digraphs.

    Iterative deepening on the extra count starting from zero guarantees
    minimality without any bound formula; the returned witness is the
    first optimal assignment in the documented branch order, so repeated
    runs give identical output.  ``max_extras`` and ``deadline`` (a
    ``time.monotonic`` instant) abort loudly instead of truncating.
    """
    if graph.n > cap:
        raise TooLarge(f"exact solver capped at {cap} vertices (got {graph.n})")
    search = _PhyloSearch(graph)
    r = 0
    while True:
        if max_extras is not None and r > max_extras:
            raise TooLarge(f"no certificate within {max_extras} extra vertices")
        if deadline is not None and time.monotonic() > deadline:
            raise TooLarge("time budget exhausted before the search finished")
        if search.run(r):
            witness = search.certificate()
            assert witness.extra_count == r
            return PhyloResult(
                kind="exact",
                method="solver",
                value=r,
                witness=witness if want_witness else None,
            )
        r += 1
        # one dedicated extra per edge always succeeds, so this cannot run away
        assert r <= graph.m, "deepening exceeded the trivial upper bound"


# ---------------------------------------------------------------------------
# Brute-force oracle.  Deliberately dumber than the solver: it enumerates
# every per-vertex in-neighborhood assignment (each base vertex tries every
# clique inside its open neighborhood, empty included, acyclicity checked
# as arcs appear) and then covers whatever edges are left with at most
# r extra cliques, trying *all* cliques, not only maximal ones.  None of
# the solver's reductions (minimal extensions, maximal extras) are used.


def _all_clique_masks(graph: Graph) -> list[int]:
    out = []
    for mask in range(1, 1 << graph.n):
        if mask.bit_count() >= 2 and graph.is_clique(mask):
            out.append(mask)
    return out


def oracle_phylogeny_number(graph: Graph, r_max: int = ORACLE_EXTRA_CAP) -> int:
    """Exhaustive reference value for tiny graphs, or raise Infeasible.

    Returns the least r <= r_max admitting a valid certificate; raises
    :class:`Infeasible` when none exists within the budget, never a
    silently wrong number.
    """
    if graph.n > ORACLE_VERTEX_CAP:
        raise TooLarge(f"oracle capped at {ORACLE_VERTEX_CAP} vertices (got {graph.n})")
    if not 0 <= r_max <= ORACLE_EXTRA_CAP:
        raise TooLarge(f"oracle extra budget capped at {ORACLE_EXTRA_CAP} (got {r_max})")
    n = graph.n
    edge_list = graph.sorted_edges()
    if not edge_list:
        return 0
    edge_index = {e: i for i, e in enumerate(edge_list)}
    all_covered = (1 << len(edge_list)) - 1

    def pairs_mask(vertex_mask: int) -> int:
        acc = 0
        members = list(bits(vertex_mask))
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                idx = edge_index.get((a, b))
                if idx is not None:
                    acc |= 1 << idx
        return acc

    # per-vertex candidates: (in-neighborhood mask, covered-pairs mask)
    candidates: list[list[tuple[int, int]]] = []
    for w in range(n):
        nb = graph.adj[w]
        subs = []
        sub = nb
        while True:
            if graph.is_clique(sub):
                subs.append((sub, pairs_mask(sub | (1 << w))))
            if sub == 0:
                break
            sub = (sub - 1) & nb
        subs.sort(key=lambda pair: (-pair[0].bit_count(), pair[0]))
        candidates.append(subs)

    # the last vertex id that could still realize each edge as a head
    last_head = []
    for u, v in edge_list:
        heads = (1 << u) | (1 << v) | (graph.adj[u] & graph.adj[v])
        last_head.append(heads.bit_length() - 1)

    clique_masks = _all_clique_masks(graph)
    cover_options: list[list[int]] = [[] for _ in edge_list]
    for cmask in clique_masks:
        pm = pairs_mask(cmask)
        for i, (u, v) in enumerate(edge_list):
            if (cmask >> u) & 1 and (cmask >> v) & 1:
                cover_options[i].append(pm)
    for options in cover_options:
        options.sort(key=lambda m: (-m.bit_count(), m))

    def extras_needed_at_least(edge_mask: int) -> int:
        """Greedy count of leftover edges pairwise in no common clique."""
        chosen_masks: list[int] = []
        for i in bits(edge_mask):
            u, v = edge_list[i]
            em = (1 << u) | (1 << v)
            if all(not graph.is_clique(em | other) for other in chosen_masks):
                chosen_masks.append(em)
        return len(chosen_masks)

    def cover_with_extras(uncovered: int, budget: int) -> bool:
        if uncovered == 0:
            return True
        if budget == 0:
            return False
        ei = (uncovered & -uncovered).bit_length() - 1
        for pm in cover_options[ei]:
            if cover_with_extras(uncovered & ~pm, budget - 1):
                return True
        return False

    out_mask = [0] * n

    def feasible(r: int) -> bool:
        def dfs(w: int, covered: int) -> bool:
            if w == n:
                return cover_with_extras(all_covered & ~covered, r)
            dead = [i for i in bits(all_covered & ~covered) if last_head[i] < w]
            if len(dead) > r:
                acc = 0
                for i in dead:
                    acc |= 1 << i
                if extras_needed_at_least(acc) > r:
                    return False
            wb = 1 << w
            for m, pm in candidates[w]:
                seen = 0
                frontier = out_mask[w]
                hit = False
                while frontier:
                    if frontier & m:
                        hit = True
                        break
                    seen |= frontier
                    nxt = 0
                    for a in bits(frontier):
                        nxt |= out_mask[a]
                    frontier = nxt & ~seen
                if hit:
                    continue
                for a in bits(m):
                    out_mask[a] |= wb
                if dfs(w + 1, covered | pm):
                    return True
                for a in bits(m):
                    out_mask[a] &= ~wb
            return False

        return dfs(0, 0)

    for r in range(r_max + 1):
        if feasible(r):
            return r
    raise Infeasible(f"no certificate with at most {r_max} extra vertices")


# ---------------------------------------------------------------------------
# Competition number.  Same search skeleton with two twists: an edge uv can
# only be realized by marriage at a third vertex (arcs never contribute
# edges), and that head may be any vertex at all, adjacent or not, since
# arcs do not show up in the competition graph.


class _CompetitionSearch(_EdgeCoverState):
    def __init__(self, graph: Graph):
        super().__init__(graph)
        self.in_mask = [0] * self.n
        self.out_mask = [0] * self.n
        self.extras_used = 0
        self.budget = 0

    def run(self, budget: int) -> bool:
        self.in_mask = [0] * self.n
        self.out_mask = [0] * self.n
        self.extras_used = 0
        self.budget = budget
        return self._dfs(0)

    def _dfs(self, covered: int) -> bool:
        if covered == self.all_covered:
            return True
        remaining = self.all_covered & ~covered
        ei = (remaining & -remaining).bit_length() - 1
        u, v = self.edge_list[ei]
        euv = (1 << u) | (1 << v)
        for h in range(self.n):
            hb = 1 << h
            if hb & euv:
                continue
            new_tails = euv & ~self.in_mask[h]
            if new_tails == 0:
                continue
            grown = self.in_mask[h] | euv
            if not self.graph.is_clique(grown):
                continue
            if self.reaches(h, new_tails, self.out_mask):
                continue
            saved = self.in_mask[h]
            self.in_mask[h] = grown
            for a in bits(new_tails):
                self.out_mask[a] |= hb
            if self._dfs(covered | self.pairs_mask(grown)):
                return True
            self.in_mask[h] = saved
            for a in bits(new_tails):
                self.out_mask[a] &= ~hb
        if self.extras_used < self.budget:
            self.extras_used += 1
            for cmask in self.max_cliques_by_edge[ei]:
                if self._dfs(covered | self.pairs_mask(cmask)):
                    return True
            self.extras_used -= 1
        return False


def competition_number_exact(
    graph: Graph,
    cap: int = SOLVER_CAP_DEFAULT,
    use_fast_path: bool = True,
) -> int:
    """Fewest isolated vertices to add so the result is a competition graph.

    Connected triangle-free graphs take the classical closed form
    ``m - n + 2``; everything else runs the head-assignment search,
    deepening from the clique-cover bound ``theta_e - n + 2`` (and from 1
    for any connected graph on two or more vertices).
    """
    if graph.n > cap:
        raise TooLarge(f"competition solver capped at {cap} vertices (got {graph.n})")
    if graph.m == 0:
        return 0
    connected = len(connected_components(graph)) == 1
    if use_fast_path and connected and not triangle_edges(graph):
        return graph.m - graph.n + 2
    start = max(0, edge_clique_cover_number(graph, cap=cap) - graph.n + 2)
    if connected and graph.n >= 2:
        start = max(start, 1)
    search = _CompetitionSearch(graph)
    k = start
    while True:
        if search.run(k):
            return k
        k += 1
        assert k <= graph.m, "deepening exceeded the trivial upper bound"
