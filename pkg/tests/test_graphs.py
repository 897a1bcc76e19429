import random

import pytest
from hypothesis import given, strategies as st

from oddcrit import (
    ExtremalParams,
    Graph,
    GraphFormatError,
    ParameterError,
    disjoint_union,
    extremal_gprime,
    family,
    g_star,
    join,
    make_complete,
    parse_edge_list,
    parse_graph6,
    parse_graph6_corpus,
    parse_graph_auto,
    proof_graph_g2,
    proof_graph_g3,
    write_graph6,
)
from conftest import random_connected_graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestElementaryConstructors:
    @pytest.mark.parametrize("m,edges", [(0, 0), (1, 0), (4, 6), (13, 78)])
    def test_complete_edge_counts(self, m, edges):
        g = make_complete(m)
        assert g.n == m
        assert g.edge_count() == edges

    def test_union_counts_and_components(self):
        g = disjoint_union(make_complete(1), make_complete(1))
        assert (g.n, g.edge_count()) == (2, 0)
        h = disjoint_union(make_complete(3), make_complete(2))
        assert (h.n, h.edge_count()) == (5, 4)
        assert h.components() == 2

    def test_join_small(self):
        k2 = join(make_complete(1), make_complete(1))
        assert k2 == make_complete(2)
        g = join(make_complete(2), disjoint_union(make_complete(1), make_complete(1)))
        assert (g.n, g.edge_count()) == (4, 5)

    def test_join_edge_count_identity_big(self):
        # e(G v H) = e(G) + e(H) + |G||H|
        union = disjoint_union(make_complete(13), Graph(3))
        g = join(make_complete(3), union)
        assert g.edge_count() == 3 + 78 + 0 + 3 * 16 == 129

    @given(st.integers(0, 6), st.integers(0, 6), st.data())
    def test_join_union_identities(self, n1, n2, data):
        e1 = data.draw(st.integers(0, max(n1 * (n1 - 1) // 2, 1)))
        rng = random.Random(e1 * 1000 + n1 * 10 + n2)
        g = Graph(n1, rng.sample([(u, v) for u in range(n1) for v in range(u + 1, n1)],
                                 min(e1, n1 * (n1 - 1) // 2)))
        h = make_complete(n2)
        u = disjoint_union(g, h)
        j = join(g, h)
        assert u.n == j.n == n1 + n2
        assert u.edge_count() == g.edge_count() + h.edge_count()
        assert j.edge_count() == g.edge_count() + h.edge_count() + n1 * n2

    def test_family_p3(self):
        g = family(1, [1, 1])
        assert (g.n, g.edge_count()) == (3, 2)
        assert sorted(g.degrees()) == [1, 1, 2]

    def test_family_rejects_degenerate(self):
        with pytest.raises(ParameterError, match="degenerate"):
            family(2, [])
        with pytest.raises(ParameterError):
            family(2, [3, 0])
        with pytest.raises(ParameterError):
            family(-1, [3])

    def test_k0_neutral_element(self):
        g = make_complete(4)
        assert join(make_complete(0), g) == g
        assert disjoint_union(g, make_complete(0)) == g


class TestExtremalFamilies:
    def test_gprime_19113(self):
        g = extremal_gprime(ExtremalParams(19, 1, 1, 3))
        assert g.n == 19
        assert g.edge_count() == 129
        assert g.min_degree() == 3
        assert g == family(3, [13, 1, 1, 1])

    def test_gprime_parity_gate(self):
        with pytest.raises(ParameterError, match="parity"):
            extremal_gprime(ExtremalParams(20, 1, 1, 3))

    def test_gprime_rejects_bad_parts(self):
        with pytest.raises(ParameterError, match="big clique"):
            extremal_gprime(ExtremalParams(5, 1, 1, 3))
        with pytest.raises(ParameterError, match="singleton"):
            extremal_gprime(ExtremalParams(13, 1, 3, 1))
        # boundary: no singleton cell at all is rejected rather than degraded
        with pytest.raises(ParameterError, match="singleton"):
            extremal_gprime(ExtremalParams(13, 1, 3, 2))
        with pytest.raises(ParameterError, match="odd"):
            extremal_gprime(ExtremalParams(19, 2, 1, 3))

    def test_g2_at_s_delta_equals_gprime(self):
        p = ExtremalParams(19, 1, 1, 3, s=3)
        assert proof_graph_g2(p) == extremal_gprime(p)

    def test_g3_rejects_s_equal_delta(self):
        with pytest.raises(ParameterError, match="delta-1"):
            proof_graph_g3(ExtremalParams(19, 1, 1, 4, s=4))

    def test_g3_part_arithmetic(self):
        g = proof_graph_g3(ExtremalParams(19, 1, 1, 4, s=3))
        assert g == family(3, [10, 2, 2, 2])

    def test_family_matches_gprime_on_sample(self):
        for (n, b, k, d) in [(19, 1, 1, 3), (31, 1, 1, 2), (25, 3, 1, 3), (28, 1, 2, 4)]:
            p = ExtremalParams(n, b, k, d)
            big, singles = p.gprime_parts()
            assert family(d, [big] + [1] * singles) == extremal_gprime(p)

    def test_big_part_is_odd(self):
        # forced by n = k (mod 2) with b odd
        for (n, b, k, d) in [(19, 1, 1, 3), (31, 1, 1, 2), (25, 3, 1, 3), (28, 1, 2, 4), (33, 5, 3, 6)]:
            big, _ = ExtremalParams(n, b, k, d).gprime_parts()
            assert big % 2 == 1

    def test_gstar_degrees(self):
        g = g_star(19, 1, 1)
        assert g.n == 19
        degs = [g.degree(v) for v in (16, 17, 18)]
        assert sorted(degs) == [3, 4, 4]

    def test_gstar_edge_count(self):
        base = family(3, [13, 1, 1, 1])
        assert g_star(19, 1, 1).edge_count() == base.edge_count() + 1

    def test_gstar_invalid(self):
        with pytest.raises(ParameterError):
            g_star(18, 1, 1)
        with pytest.raises(ParameterError):
            g_star(5, 1, 1)


class TestQueries:
    def test_min_degree_edge_count(self):
        k5 = make_complete(5)
        assert (k5.min_degree(), k5.edge_count()) == (4, 10)
        p3 = path(3)
        assert (p3.min_degree(), p3.edge_count()) == (1, 2)

    def test_min_degree_empty_graph(self):
        with pytest.raises(ParameterError):
            Graph(0).min_degree()

    def test_vertex_connectivity(self):
        assert make_complete(6).vertex_connectivity() == 5
        assert cycle(5).vertex_connectivity() == 2
        assert extremal_gprime(ExtremalParams(19, 1, 1, 3)).vertex_connectivity() == 3
        assert disjoint_union(make_complete(2), make_complete(2)).vertex_connectivity() == 0

    def test_connectivity_at_most_min_degree(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randrange(2, 9), rng.uniform(0.1, 0.9))
            assert g.vertex_connectivity() <= g.min_degree()

    def test_is_k_connected(self):
        g = extremal_gprime(ExtremalParams(19, 1, 1, 3))
        assert g.is_k_connected(3)
        assert not g.is_k_connected(4)
        assert not path(3).is_k_connected(2)

    def test_components_and_odd_components(self):
        assert Graph(3).odd_components_after_removal(()) == 3
        assert make_complete(4).odd_components_after_removal(()) == 0
        g = extremal_gprime(ExtremalParams(19, 1, 1, 3))
        assert g.odd_components_after_removal(range(3)) == 4
        assert g.components() == 1

    def test_without_vertices_relabels(self):
        g = path(4).without_vertices([1])
        assert g.n == 3
        assert sorted(g.edges()) == [(1, 2)]

    def test_edges_and_non_edges_partition_pairs(self):
        g = cycle(5)
        assert len(list(g.edges())) + len(list(g.non_edges())) == 10


class TestGraphIO:
    def test_spec_example_string(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert write_graph6(g) == "D?{"

    def test_edge_list_p3(self):
        g = parse_edge_list("0 1\n1 2")
        assert g == path(3)

    def test_edge_list_comments_and_errors(self):
        g = parse_edge_list("# a comment\n0 1\n\n1 2  # trailing\n")
        assert g == path(3)
        with pytest.raises(GraphFormatError):
            parse_edge_list("")
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_edge_list("1 1")
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 x")

    def test_bad_length_reports_offset(self):
        with pytest.raises(GraphFormatError, match="offset"):
            parse_graph6("D?")  # order 5 needs 2 body bytes
        with pytest.raises(GraphFormatError, match="offset"):
            parse_graph6("D?{{")

    def test_bad_byte_rejected(self):
        with pytest.raises(GraphFormatError, match="invalid graph6 byte"):
            parse_graph6("D?*")

    def test_auto_detection(self):
        assert parse_graph_auto("0 1\n1 2") == path(3)
        assert parse_graph_auto(">>graph6<<D?{").n == 5
        assert parse_graph_auto("D?{").n == 5

    def test_corpus_parsing(self):
        text = "# two graphs\nD?{\n" + write_graph6(make_complete(4)) + "\n"
        graphs = parse_graph6_corpus(text)
        assert [g.n for g in graphs] == [5, 4]

    @given(st.integers(0, 62), st.randoms(use_true_random=False))
    def test_roundtrip_small(self, n, rnd):
        g = random_connected_graph(rnd, n, 0.4) if n >= 2 else Graph(n)
        assert parse_graph6(write_graph6(g)) == g

    def test_roundtrip_multibyte(self):
        rng = random.Random(3)
        for n in (63, 70, 100):
            g = random_connected_graph(rng, n, 0.05)
            text = write_graph6(g)
            assert text.startswith("~")
            assert parse_graph6(text) == g

    def test_roundtrip_canonical_bytes(self):
        rng = random.Random(11)
        for _ in range(100):
            g = random_connected_graph(rng, rng.randrange(2, 12), rng.random())
            text = write_graph6(g)
            assert write_graph6(parse_graph6(text)) == text
