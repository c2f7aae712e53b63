import math

import numpy as np
import pytest

import dualgain._rings as rings
from dualgain import (
    BadParameterError,
    DualNumber,
    DualScalar,
    GainGraph,
    KIND_ADJACENCY,
    KIND_LAPLACIAN,
    Quaternion,
    RINGS,
    UnderlyingGraph,
    adjacency_matrix,
    check_interlacing,
    cycle_graph,
    cycle_spectrum_closed_form,
    laplacian_matrix,
    path_graph,
    path_spectrum_closed_form,
    radius_report,
    spectral_radius,
    spectrum,
    underlying_radius,
)
from dualgain.sampling import (
    random_balanced_gain_graph,
    random_connected_graph,
    random_gain_graph,
    random_switching,
    random_unbalanced_connected,
    random_unit_scalar,
)

S2 = math.sqrt(2.0)


def spectra_close(a, b, tol=1e-9):
    return len(a) == len(b) and all(
        abs(x.std - y.std) <= tol and abs(x.dual - y.dual) <= tol
        for x, y in zip(a, b))


class TestMatrices:
    def test_balanced_triangle_entries(self, balanced_triangle):
        a = adjacency_matrix(balanced_triangle)
        assert a.entry(0, 1) == DualScalar.complex(1, -1j)
        assert a.entry(1, 0) == DualScalar.complex(1, 1j)
        assert a.entry(0, 2) == DualScalar.complex(-1j)
        assert a.entry(2, 0) == DualScalar.complex(1j)
        assert a.entry(1, 2) == DualScalar.complex(-1j, 1)
        assert a.entry(2, 1) == DualScalar.complex(1j, 1)
        assert a.entry(0, 0) == DualScalar.zero("complex")
        assert a.is_hermitian(0.0)

    def test_edgeless_graph(self):
        g = UnderlyingGraph(3, [])
        phi = GainGraph(g, "real", {})
        assert adjacency_matrix(phi).max_abs_parts() == (0.0, 0.0)
        assert laplacian_matrix(phi).max_abs_parts() == (0.0, 0.0)

    def test_neutral_gains_give_01_adjacency(self):
        g = UnderlyingGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        phi = GainGraph(g, "real", {e: DualScalar.one("real") for e in g.edges})
        assert np.array_equal(adjacency_matrix(phi).s, g.adjacency())

    def test_laplacian_of_neutral_cycle(self):
        phi = cycle_graph(3, DualScalar.one("real"))
        lap = laplacian_matrix(phi)
        expected = np.array([[2.0, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        assert np.allclose(lap.s, expected)
        assert np.allclose(lap.s.sum(axis=1), 0.0)


class TestGoldenSpectra:
    def test_balanced_triangle(self, balanced_triangle):
        vals = spectrum(balanced_triangle).values
        assert spectra_close(vals, [DualNumber(2), DualNumber(-1), DualNumber(-1)], 1e-9)

    def test_real_spectrum_triangle(self, real_spectrum_triangle):
        vals = spectrum(real_spectrum_triangle).values
        expected = [DualNumber(2 * math.cos((-math.pi / 4 + 2 * math.pi * j) / 3))
                    for j in (0, 1, 2)]
        expected.sort(reverse=True)
        assert spectra_close(vals, expected, 1e-12)

    def test_dual_spectrum_triangle(self, dual_spectrum_triangle):
        vals = spectrum(dual_spectrum_triangle).values
        # frozen from the closed form with theta = -pi/4 + eps
        expected = [DualNumber(1.9318516525781366, 0.17254603006834716),
                    DualNumber(-0.5176380902050415, -0.6439505508593789),
                    DualNumber(-1.4142135623730951, 0.4714045207910317)]
        assert spectra_close(vals, expected, 1e-12)

    def test_balanced_laplacian(self, balanced_triangle):
        vals = spectrum(balanced_triangle, KIND_LAPLACIAN).values
        assert spectra_close(vals, [DualNumber(3), DualNumber(3), DualNumber(0)], 1e-9)


class TestClosedForms:
    def test_path_three_adjacency(self):
        vals = path_spectrum_closed_form(3).values
        assert spectra_close(vals, [DualNumber(S2), DualNumber(0), DualNumber(-S2)], 1e-12)

    def test_path_two_laplacian(self):
        vals = path_spectrum_closed_form(2, KIND_LAPLACIAN).values
        assert spectra_close(vals, [DualNumber(2), DualNumber(0)], 1e-12)

    def test_neutral_cycle(self):
        vals = cycle_spectrum_closed_form(3, DualScalar.one("complex")).values
        assert spectra_close(vals, [DualNumber(2), DualNumber(-1), DualNumber(-1)], 1e-12)

    def test_dual_triangle_gain(self, dual_spectrum_triangle):
        q = dual_spectrum_triangle.gain_of_walk([0, 1, 2, 0])
        vals = cycle_spectrum_closed_form(3, q).values
        assert spectra_close(vals, spectrum(dual_spectrum_triangle).values, 1e-12)

    def test_laplacian_is_two_minus_adjacency(self):
        rng = np.random.default_rng(0)
        q = random_unit_scalar(rng, "complex")
        adj = cycle_spectrum_closed_form(7, q, KIND_ADJACENCY).values
        lap = cycle_spectrum_closed_form(7, q, KIND_LAPLACIAN).values
        flipped = sorted((DualNumber(2) - v for v in adj),
                         key=lambda v: (-v.std, -v.dual))
        assert spectra_close(lap, flipped, 1e-12)

    @pytest.mark.parametrize("ring", RINGS)
    def test_cycle_matches_eigensolver(self, ring):
        rng = np.random.default_rng(1)
        tol = 1e-8 if ring == "quaternion" else 1e-9
        for n in (3, 5, 8):
            phi = random_gain_graph(rng, cycle_graph(n, DualScalar.one(ring)).graph, ring)
            q = phi.gain_of_walk(list(range(n)) + [0])
            closed = cycle_spectrum_closed_form(n, q).values
            dense = spectrum(phi, with_vectors=False).values
            assert spectra_close(closed, dense, tol)

    def test_degenerate_standard_parts_with_split_dual_parts(self):
        # cycle gain 1 + i t eps has angle 0 + t eps: standard eigenvalues
        # 2cos(2 pi j / n) collide in pairs (j, n - j) while their dual
        # parts -(t/n) sin(...) differ in sign, so the supplement path must
        # resolve every cluster and the sort must agree with the closed form
        t = 0.8
        q = DualScalar.complex(1, 1j * t)
        n = 6
        phi = cycle_graph(n, q)
        dense = spectrum(phi, with_vectors=False).values
        closed = cycle_spectrum_closed_form(n, q).values
        assert spectra_close(dense, closed, 1e-12)
        stds = [round(v.std, 9) for v in dense]
        assert stds == [2.0, 1.0, 1.0, -1.0, -1.0, -2.0]
        assert dense[1].dual == pytest.approx(2 * t / n * math.sin(2 * math.pi / 6),
                                              abs=1e-12)
        assert dense[2].dual == pytest.approx(-dense[1].dual, abs=1e-12)

    @pytest.mark.parametrize("ring", RINGS)
    def test_path_matches_eigensolver(self, ring):
        rng = np.random.default_rng(2)
        for n in (2, 5, 9):
            phi = random_gain_graph(rng, path_graph(n, ring).graph, ring)
            closed = path_spectrum_closed_form(n).values
            dense = spectrum(phi, with_vectors=False).values
            assert spectra_close(closed, dense, 1e-9)


class TestSpectralRadius:
    def test_balanced_triangle(self, balanced_triangle):
        rho = spectral_radius(spectrum(balanced_triangle))
        assert rho.allclose(DualNumber(2), 1e-9)

    def test_dual_order_of_magnitudes(self, dual_spectrum_triangle):
        rho = spectral_radius(spectrum(dual_spectrum_triangle))
        assert rho.allclose(DualNumber(1.9318516525781366, 0.17254603006834716), 1e-12)

    def test_empty_raises(self):
        with pytest.raises(BadParameterError):
            spectral_radius([])


class TestInterlacing:
    def test_triangle_drop_vertex(self, balanced_triangle):
        report = check_interlacing(balanced_triangle, [0, 1])
        assert report.holds
        assert spectra_close(report.values_sub, [DualNumber(1), DualNumber(-1)], 1e-9)

    def test_full_subset_trivial(self, dual_spectrum_triangle):
        report = check_interlacing(dual_spectrum_triangle, range(3))
        assert report.holds
        assert spectra_close(report.values_full, report.values_sub, 1e-12)

    @pytest.mark.parametrize("kind", [KIND_ADJACENCY, KIND_LAPLACIAN])
    def test_random_instances(self, kind):
        rng = np.random.default_rng(3)
        for trial in range(60):
            ring = RINGS[trial % 3]
            n = int(rng.integers(3, 9))
            phi = random_gain_graph(
                rng, random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
            k = int(rng.integers(1, n))
            subset = sorted(rng.choice(n, size=k, replace=False).tolist())
            assert check_interlacing(phi, subset, kind).holds


class TestRadiusReports:
    def test_unbalanced_is_strict(self, real_spectrum_triangle):
        report = radius_report(real_spectrum_triangle)
        assert report.bound_holds and not report.equality
        assert report.rho_gain.std < report.rho_graph - 1e-10
        assert report.consistent

    def test_balanced_equality(self, balanced_triangle):
        report = radius_report(balanced_triangle)
        assert report.equality and report.balanced and report.consistent
        assert report.rho_graph == pytest.approx(2.0)
        assert report.delta_bound == 2.0

    def test_all_minus_cycle_laplacian_equality(self):
        # C4 with every gain -1: switching-equivalent to itself as the
        # all-(-1) graph, so the Laplacian radius meets rho_Q = 2 Delta
        g = UnderlyingGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        phi = GainGraph(g, "real", {e: DualScalar.real(-1) for e in g.edges})
        report = radius_report(phi, KIND_LAPLACIAN)
        assert report.rho_graph == pytest.approx(4.0)
        assert report.delta_bound == 4.0
        assert report.equality and report.antibalanced and report.consistent
        assert report.rho_gain.allclose(DualNumber(4), 1e-9)
        # its cycle gain is (+1)**4 = 1; the closed form then gives {4,2,2,0}
        q = phi.gain_of_walk([0, 1, 2, 3, 0])
        closed = cycle_spectrum_closed_form(4, q, KIND_LAPLACIAN)
        assert spectral_radius(closed).allclose(DualNumber(4), 1e-12)

    def test_cycle_gain_minus_one_is_not_extremal(self):
        # a C4 whose total cycle gain is -1 (theta = pi) is neither balanced
        # nor antibalanced; its Laplacian radius 2 + sqrt(2) stays below 4
        phi = cycle_graph(4, DualScalar.real(-1))
        report = radius_report(phi, KIND_LAPLACIAN)
        assert not report.equality and report.consistent
        assert report.rho_gain.allclose(DualNumber(2 + S2), 1e-9)

    def test_random_bounds(self):
        rng = np.random.default_rng(4)
        for trial in range(40):
            ring = RINGS[trial % 3]
            n = int(rng.integers(3, 9))
            phi = random_gain_graph(
                rng, random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
            for kind in (KIND_ADJACENCY, KIND_LAPLACIAN):
                report = radius_report(phi, kind)
                assert report.bound_holds
                assert report.delta_bound_holds
                assert report.rho_graph <= report.delta_bound + 1e-12
                assert report.consistent is not False


class TestSpectralInvariants:
    def test_switching_invariance(self):
        rng = np.random.default_rng(5)
        for trial in range(30):
            ring = RINGS[trial % 3]
            n = int(rng.integers(3, 8))
            phi = random_gain_graph(
                rng, random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
            switched = phi.switch(random_switching(rng, ring, n))
            for kind in (KIND_ADJACENCY, KIND_LAPLACIAN):
                assert spectra_close(spectrum(phi, kind, with_vectors=False).values,
                                     spectrum(switched, kind, with_vectors=False).values,
                                     1e-9)

    def test_balanced_matches_underlying(self):
        rng = np.random.default_rng(6)
        for trial in range(30):
            ring = RINGS[trial % 3]
            n = int(rng.integers(3, 9))
            graph = random_connected_graph(rng, n, int(rng.integers(0, 4)))
            phi = random_balanced_gain_graph(rng, graph, ring)
            for kind, mat in ((KIND_ADJACENCY, graph.adjacency()),
                              (KIND_LAPLACIAN, np.diag(graph.degrees().astype(float))
                               - graph.adjacency())):
                vals = spectrum(phi, kind, with_vectors=False).values
                w = np.sort(np.linalg.eigvalsh(mat))[::-1]
                assert all(abs(v.dual) <= 1e-9 for v in vals)
                assert np.allclose([v.std for v in vals], w, atol=1e-9)

    def test_unbalanced_radius_strictly_smaller(self):
        rng = np.random.default_rng(7)
        for trial in range(20):
            ring = RINGS[trial % 3]
            phi = random_unbalanced_connected(rng, int(rng.integers(4, 9)), ring)
            rho = spectral_radius(spectrum(phi, with_vectors=False))
            assert rho.std < underlying_radius(phi) - 1e-10

    def test_rayleigh_identity(self):
        rng = np.random.default_rng(8)
        for ring in RINGS:
            n = 6
            phi = random_gain_graph(rng, random_connected_graph(rng, n, 3), ring)
            a = adjacency_matrix(phi)
            spec = spectrum(phi)
            for lam, x in zip(spec.values, spec.vectors):
                quad = x.dot(a @ x)
                assert quad.real_part().allclose(lam, 1e-9)
                # and the edge-sum form of the same quadratic form
                acc = DualNumber.zero()
                for u, v, g in phi.gains():
                    term = x.entry(u).conjugate() * g * x.entry(v)
                    acc = acc + DualNumber(2, 0) * term.real_part()
                assert acc.allclose(lam, 1e-9)

    def test_laplacian_standard_parts_nonnegative(self):
        rng = np.random.default_rng(9)
        for trial in range(20):
            ring = RINGS[trial % 3]
            phi = random_gain_graph(
                rng, random_connected_graph(rng, int(rng.integers(2, 9)), 2), ring)
            vals = spectrum(phi, KIND_LAPLACIAN, with_vectors=False).values
            assert all(v.std >= -1e-10 for v in vals)

    def test_balanced_connected_laplacian_one_zero(self):
        rng = np.random.default_rng(10)
        for ring in RINGS:
            graph = random_connected_graph(rng, 7, 3)
            phi = random_balanced_gain_graph(rng, graph, ring)
            vals = spectrum(phi, KIND_LAPLACIAN, with_vectors=False).values
            zeros = [v for v in vals if abs(v.std) <= 1e-9]
            assert len(zeros) == 1 and abs(zeros[0].dual) <= 1e-9
            assert sum(1 for v in vals if v.std > 1e-9) == len(vals) - 1

    def test_disconnected_laplacian_zero_multiplicity(self):
        rng = np.random.default_rng(12)
        # two balanced components: one Laplacian zero per component
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        g = UnderlyingGraph(6, edges)
        phi = random_balanced_gain_graph(rng, g, "complex")
        vals = spectrum(phi, KIND_LAPLACIAN, with_vectors=False).values
        zeros = [v for v in vals if abs(v.std) <= 1e-9 and abs(v.dual) <= 1e-9]
        assert len(zeros) == 2

    def test_negation_reverses_spectrum(self):
        rng = np.random.default_rng(11)
        for ring in RINGS:
            phi = random_gain_graph(rng, random_connected_graph(rng, 6, 2), ring)
            vals = spectrum(phi, with_vectors=False).values
            neg = spectrum(phi.negate(), with_vectors=False).values
            flipped = sorted((-v for v in vals), key=lambda v: (-v.std, -v.dual))
            assert spectra_close(neg, flipped, 1e-9)
            # the antibalance identity -lambda_n(phi) = lambda_1(-phi)
            assert (-vals[-1]).allclose(neg[0], 1e-9)
