import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oddcrit import (
    DisconnectedGraphError,
    ExtremalParams,
    Graph,
    ParameterError,
    adjacency_matrix,
    check_interlacing,
    disjoint_union,
    distance_matrix,
    dominant_eigenpair,
    eigenvalues,
    extremal_gprime,
    family,
    make_complete,
    matrix_csv,
    spectral_radius,
    symmetric_eigenvalues,
    transmissions,
    wiener_gprime_closed_form,
    wiener_index,
)
from conftest import random_connected_graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_symmetric(rng, n, scale=5.0):
    a = np.array([[rng.uniform(-scale, scale) for _ in range(n)] for _ in range(n)])
    return (a + a.T) / 2.0


class TestDistanceMatrix:
    def test_complete(self):
        d = distance_matrix(make_complete(4))
        assert (d == np.ones((4, 4)) - np.eye(4)).all()

    def test_path3(self):
        d = distance_matrix(path(3))
        assert d.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_integer_dtype(self):
        assert np.issubdtype(distance_matrix(cycle(5)).dtype, np.integer)

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError, match="distance undefined"):
            distance_matrix(disjoint_union(make_complete(2), make_complete(2)))

    def test_family_graphs_have_diameter_two(self):
        rng = random.Random(5)
        for _ in range(50):
            s = rng.randrange(1, 4)
            parts = [rng.randrange(1, 6) for _ in range(rng.randrange(1, 4))]
            d = distance_matrix(family(s, parts))
            assert set(np.unique(d)) <= {0, 1, 2}

    def test_triangle_inequality(self):
        rng = random.Random(6)
        for _ in range(10):
            d = distance_matrix(random_connected_graph(rng, 8, 0.3))
            n = d.shape[0]
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        assert d[i, j] <= d[i, k] + d[k, j]


class TestEigensolver:
    def test_path3_distance_spectrum(self):
        # roots of x^3 - 6x - 4 = (x + 2)(x^2 - 2x - 2)
        got = symmetric_eigenvalues(distance_matrix(path(3)))
        expected = [1 + math.sqrt(3), 1 - math.sqrt(3), -2.0]
        assert np.allclose(got, sorted(expected, reverse=True), atol=1e-10)

    def test_complete_adjacency(self):
        got = symmetric_eigenvalues(adjacency_matrix(make_complete(6)))
        assert abs(got[0] - 5) < 1e-10
        assert np.allclose(got[1:], -1, atol=1e-10)

    def test_spectrum_object(self):
        spec = eigenvalues(distance_matrix(make_complete(3)))
        assert len(spec) == 3
        assert abs(spec.radius - 2) < 1e-10

    def test_agrees_with_lapack(self):
        rng = random.Random(1)
        for n in (1, 2, 3, 5, 8, 13, 20):
            a = random_symmetric(rng, n)
            ours = symmetric_eigenvalues(a)
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert np.allclose(ours, ref, atol=1e-9)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ParameterError, match="not symmetric"):
            symmetric_eigenvalues(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_rejects_nonfinite(self):
        with pytest.raises(ParameterError, match="finite"):
            symmetric_eigenvalues(np.array([[np.inf, 0.0], [0.0, 1.0]]))

    @given(st.integers(1, 9), st.randoms(use_true_random=False))
    def test_eigenvalue_sum_equals_trace(self, n, rnd):
        a = random_symmetric(rnd, n)
        vals = symmetric_eigenvalues(a)
        norm = max(float(np.linalg.norm(a)), 1.0)
        assert abs(vals.sum() - np.trace(a)) < 1e-8 * norm

    def test_power_iteration_matches_full(self):
        rng = random.Random(2)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randrange(3, 12), rng.uniform(0.2, 0.9))
            for kind in ("distance", "distance_signless_laplacian", "adjacency"):
                assert abs(
                    spectral_radius(g, kind) - spectral_radius(g, kind, method="full")
                ) < 1e-8

    def test_dominant_eigenpair_zero_matrix(self):
        lam, vec = dominant_eigenpair(np.zeros((3, 3)))
        assert lam == 0.0
        assert np.allclose(np.linalg.norm(vec), 1.0)

    def test_spectrum_sorted_descending(self):
        rng = random.Random(3)
        vals = np.asarray(eigenvalues(random_symmetric(rng, 7)).values)
        assert (np.diff(vals) <= 1e-12).all()

    def test_radius_dominates_for_nonnegative_irreducible(self):
        rng = random.Random(4)
        for _ in range(10):
            g = random_connected_graph(rng, rng.randrange(2, 10), rng.random())
            spec = eigenvalues(distance_matrix(g))
            assert all(spec.radius >= abs(v) - 1e-10 for v in spec.values)


class TestSpectralRadii:
    @pytest.mark.parametrize("m", [2, 5, 9, 17])
    def test_distance_radius_complete(self, m):
        assert abs(spectral_radius(make_complete(m), "distance") - (m - 1)) < 1e-9

    def test_distance_signless_laplacian_complete(self):
        # Tr = n-1 everywhere and D = J - I
        assert abs(spectral_radius(make_complete(7), "distance_signless_laplacian") - 12) < 1e-9

    def test_eta_cycle4(self):
        # circulant distance eigenvalues (4, -2, 0, -2), Tr = 4
        assert abs(spectral_radius(cycle(4), "distance_signless_laplacian") - 8) < 1e-9

    def test_adjacency_star(self):
        assert abs(spectral_radius(star(3), "adjacency") - math.sqrt(3)) < 1e-9

    def test_signless_laplacian_complete(self):
        assert abs(spectral_radius(make_complete(4), "signless_laplacian") - 6) < 1e-9

    def test_distance_kind_rejects_disconnected(self):
        g = disjoint_union(make_complete(2), make_complete(2))
        with pytest.raises(DisconnectedGraphError):
            spectral_radius(g, "distance")
        # adjacency kinds still fine
        assert abs(spectral_radius(g, "adjacency") - 1) < 1e-9

    def test_unknown_kind(self):
        with pytest.raises(ParameterError, match="kind"):
            spectral_radius(make_complete(3), "laplacian")

    def test_empty_graph(self):
        with pytest.raises(ParameterError):
            spectral_radius(Graph(0), "adjacency")

    def test_single_vertex(self):
        assert spectral_radius(make_complete(1), "distance") == 0.0


class TestTransmissionsAndWiener:
    def test_complete(self):
        n = 9
        assert wiener_index(make_complete(n)) == n * (n - 1) // 2

    def test_path3(self):
        assert wiener_index(path(3)) == 4

    def test_cycle4_transmission_regular(self):
        tr = transmissions(cycle(4))
        assert tr.tolist() == [4, 4, 4, 4]
        assert wiener_index(cycle(4)) == 8

    def test_transmission_sum_is_twice_wiener(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randrange(2, 12), rng.random())
            assert int(transmissions(g).sum()) == 2 * wiener_index(g)

    def test_closed_form_19113(self):
        assert wiener_gprime_closed_form(ExtremalParams(19, 1, 1, 3)) == 213
        assert wiener_index(extremal_gprime(ExtremalParams(19, 1, 1, 3))) == 213

    def test_closed_form_matches_direct_on_sample(self):
        samples = [
            (19, 1, 1, 3), (31, 1, 1, 2), (25, 3, 1, 3), (28, 1, 2, 4),
            (33, 5, 3, 6), (47, 1, 1, 3), (24, 1, 2, 3), (29, 3, 1, 2),
        ]
        for n, b, k, d in samples:
            p = ExtremalParams(n, b, k, d)
            assert wiener_gprime_closed_form(p) == wiener_index(extremal_gprime(p))

    def test_closed_form_invalid_parity(self):
        with pytest.raises(ParameterError):
            wiener_gprime_closed_form(ExtremalParams(20, 1, 1, 3))


class TestEdgeMonotonicity:
    def test_mu1_strictly_decreases_on_edge_addition(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randrange(4, 11), rng.uniform(0.2, 0.7))
            non_edges = list(g.non_edges())
            if not non_edges:
                continue
            u, v = rng.choice(non_edges)
            assert spectral_radius(g.with_edge(u, v), "distance") < spectral_radius(g, "distance") - 1e-9

    def test_eta1_strictly_increases_on_edge_deletion(self):
        rng = random.Random(22)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randrange(4, 11), rng.uniform(0.3, 0.8))
            candidates = [e for e in g.edges() if g.without_edge(*e).is_connected()]
            if not candidates:
                continue
            u, v = rng.choice(candidates)
            assert spectral_radius(g.without_edge(u, v), "distance_signless_laplacian") > (
                spectral_radius(g, "distance_signless_laplacian") + 1e-9
            )


class TestInterlacing:
    def test_random_principal_submatrices(self):
        rng = random.Random(23)
        for _ in range(25):
            n = rng.randrange(2, 9)
            a = random_symmetric(rng, n)
            outer = symmetric_eigenvalues(a)
            keep = sorted(rng.sample(range(n), rng.randrange(1, n)))
            inner = symmetric_eigenvalues(a[np.ix_(keep, keep)])
            assert check_interlacing(outer, inner)

    def test_violation_detected(self):
        assert not check_interlacing([1.0, 0.0], [2.0])

    def test_inner_longer_rejected(self):
        with pytest.raises(ParameterError):
            check_interlacing([1.0], [1.0, 0.0])


class TestFourWOverN:
    def test_lower_bound_on_random_graphs(self):
        rng = random.Random(24)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randrange(3, 12), rng.random())
            eta = spectral_radius(g, "distance_signless_laplacian")
            assert eta >= 4 * wiener_index(g) / g.n - 1e-8

    @pytest.mark.parametrize("n", range(3, 10))
    def test_equality_on_cycles(self, n):
        g = cycle(n)
        eta = spectral_radius(g, "distance_signless_laplacian")
        assert abs(eta - 4 * wiener_index(g) / n) < 1e-8

    def test_strict_on_non_transmission_regular(self):
        g = path(4)
        eta = spectral_radius(g, "distance_signless_laplacian")
        assert eta > 4 * wiener_index(g) / 4 + 1e-6


def test_matrix_csv_format():
    text = matrix_csv(np.array([[0, 1.5], [1.5, 0]]))
    assert text == "0,1.5\n1.5,0\n"
