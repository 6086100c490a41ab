"""Derived-graph operators and certificate validation."""

import pytest

from phylokit.derived import (
    cared_edges,
    certificate_to_dot,
    check_nontriangle_edge_arcs,
    competition_graph,
    digraph_to_dot,
    drop_extra_out_arcs,
    graph_to_dot,
    phylogeny_graph,
    underlying_graph,
    validate_phylogeny_digraph,
)
from phylokit.errors import ArcIntoBase, CyclicDigraph, NotAcyclic, NotInduced
from phylokit.generate import all_digraph_arc_sets
from phylokit.graphs import Digraph, Graph, bits, is_acyclic
from phylokit.witness import figure_catalog


class TestUnderlying:
    def test_two_cycle_gives_single_edge(self):
        assert underlying_graph(Digraph(2, [(0, 1), (1, 0)])) == Graph(2, [(0, 1)])

    def test_empty(self):
        assert underlying_graph(Digraph(3)) == Graph(3)

    def test_catalog_digraph_skeleton(self):
        d, _ = figure_catalog("fig1_D")
        assert underlying_graph(d).m == 7


class TestCompetition:
    def test_one_common_prey(self):
        assert competition_graph(Digraph(3, [(0, 2), (1, 2)])) == Graph(3, [(0, 1)])

    def test_directed_path_has_none(self):
        assert competition_graph(Digraph(3, [(0, 1), (1, 2)])).m == 0

    def test_in_star_marries_all(self):
        d = Digraph(4, [(0, 3), (1, 3), (2, 3)])
        assert competition_graph(d) == Graph(4, [(0, 1), (0, 2), (1, 2)])


class TestPhylogeny:
    def test_v_structure(self):
        assert phylogeny_graph(Digraph(3, [(0, 2), (1, 2)])) == Graph(
            3, [(0, 1), (0, 2), (1, 2)]
        )

    def test_catalog_pair(self):
        g = figure_catalog("fig1_G")
        d, base = figure_catalog("fig1_D")
        restricted = {
            e for e in phylogeny_graph(d).edges if e[0] < 6 and e[1] < 6
        }
        assert restricted == g.edges

    def test_single_vertex(self):
        assert phylogeny_graph(Digraph(1)) == Graph(1)

    def test_rejects_cycle(self):
        with pytest.raises(CyclicDigraph):
            phylogeny_graph(Digraph(2, [(0, 1), (1, 0)]))

    def test_union_and_moralization_exhaustive_n4(self):
        for arcs in all_digraph_arc_sets(4):
            d = Digraph(4, arcs)
            if not is_acyclic(d):
                continue
            p = phylogeny_graph(d)
            assert p.edges == underlying_graph(d).edges | competition_graph(d).edges
            married = {tuple(sorted(a)) for a in d.arcs}
            for w in range(4):
                preds = list(bits(d.inn[w]))
                for i, a in enumerate(preds):
                    for b in preds[i + 1:]:
                        married.add((a, b))
            assert p.edges == married


class TestValidate:
    def test_catalog_certificate(self):
        g = figure_catalog("fig1_G")
        d, base = figure_catalog("fig1_D")
        cert = validate_phylogeny_digraph(d, base, g)
        assert cert.extra_count == 1
        assert cert.extras == (6,)

    def test_not_induced_when_marrying_nonedge(self):
        # all in-arcs at one head marry its in-neighbors; 0 and 2 are not
        # adjacent in the path, so the result is not induced
        path = Graph(3, [(0, 1), (1, 2)])
        d = Digraph(3, [(0, 1), (2, 1)])
        with pytest.raises(NotInduced) as info:
            validate_phylogeny_digraph(d, range(3), path)
        assert info.value.edge == (0, 2)
        assert not info.value.missing

    def test_missing_edge_reported(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(NotInduced) as info:
            validate_phylogeny_digraph(Digraph(2), range(2), g)
        assert info.value.edge == (0, 1)
        assert info.value.missing

    def test_arc_into_base(self):
        g = Graph(2, [(0, 1)])
        d = Digraph(3, [(0, 1), (2, 0)])
        with pytest.raises(ArcIntoBase) as info:
            validate_phylogeny_digraph(d, range(2), g)
        assert info.value.arc == (2, 0)

    def test_not_acyclic(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(NotAcyclic):
            validate_phylogeny_digraph(Digraph(2, [(0, 1), (1, 0)]), range(2), g)

    def test_base_order_permutation(self):
        # arcs (1, 0): plays edge between target vertices, any order works
        g = Graph(2, [(0, 1)])
        d = Digraph(2, [(1, 0)])
        cert = validate_phylogeny_digraph(d, range(2), g, order=(1, 0))
        assert cert.base == (1, 0)


class TestCaredEdges:
    def test_catalog_digraph_cares_two_edges(self):
        d, base = figure_catalog("fig1_D")
        cares = cared_edges(d, base)
        assert cares == {(1, 3): frozenset({6}), (2, 5): frozenset({4})}

    def test_all_arcs_realized_means_none(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        assert cared_edges(d, range(3)) == {}

    def test_underlying_edge_excluded(self):
        d = Digraph(3, [(0, 2), (1, 2), (0, 1)])
        assert cared_edges(d, {0, 1}) == {}


class TestNormalization:
    def test_extra_out_arcs_can_always_be_dropped(self):
        # certificate whose extra vertex also feeds a second extra
        g = figure_catalog("fig1_G")
        d, base = figure_catalog("fig1_D")
        widened = Digraph(8, list(d.arcs) + [(6, 7)])
        cert = validate_phylogeny_digraph(widened, base, g)
        trimmed = drop_extra_out_arcs(cert)
        assert (6, 7) not in trimmed.arcs
        validate_phylogeny_digraph(trimmed, base, g)

    def test_nontriangle_arc_rules_hold_on_catalog(self):
        g = figure_catalog("fig1_G")
        d, base = figure_catalog("fig1_D")
        check_nontriangle_edge_arcs(g, d, base)

    def test_nontriangle_arc_rules_catch_violation(self):
        # both 0 and 2 point at 1 although edge (0,1) is on no triangle
        g = Graph(3, [(0, 1), (1, 2)])
        d = Digraph(4, [(0, 3), (1, 3), (0, 1), (2, 1)])
        with pytest.raises(AssertionError):
            check_nontriangle_edge_arcs(g, d, (0, 1, 2))


class TestDot:
    def test_graph_dot_mentions_every_edge(self):
        dot = graph_to_dot(figure_catalog("fig2_G"))
        assert dot.count(" -- ") == 7

    def test_digraph_dot(self):
        d, _ = figure_catalog("fig1_D")
        assert digraph_to_dot(d).count(" -> ") == 7

    def test_certificate_dot_marks_extras_and_cared_edges(self):
        d, base = figure_catalog("fig1_D")
        dot = certificate_to_dot(d, base)
        assert "shape=box" in dot and "shape=circle" in dot
        assert "cared by" in dot
