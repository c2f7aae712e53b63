import numpy as np
import pytest

from dualgain import (
    DualScalar,
    DuplicateEdgeError,
    GainGraph,
    NotAWalkError,
    NotUnitGainError,
    RINGS,
    SelfLoopError,
    UnderlyingGraph,
)
from dualgain.sampling import (
    random_balanced_gain_graph,
    random_connected_graph,
    random_gain_graph,
    random_switching,
    random_unbalanced_connected,
)


class TestUnderlyingGraph:
    def test_degrees_and_delta(self):
        g = UnderlyingGraph(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
        assert list(g.degrees()) == [3, 1, 2, 2]
        assert g.max_degree() == 3
        assert g.neighbors(0) == [1, 2, 3]

    def test_validation(self):
        with pytest.raises(SelfLoopError):
            UnderlyingGraph(3, [(1, 1)])
        with pytest.raises(DuplicateEdgeError):
            UnderlyingGraph(3, [(0, 1), (1, 0)])

    def test_components(self):
        g = UnderlyingGraph(5, [(0, 1), (2, 3)])
        assert g.components() == [[0, 1], [2, 3], [4]]
        assert not g.is_connected()


class TestBuild:
    def test_non_unit_gain_rejected(self):
        g = UnderlyingGraph(2, [(0, 1)])
        with pytest.raises(NotUnitGainError) as exc:
            GainGraph(g, "real", {(0, 1): DualScalar.real(1, 1)})
        assert exc.value.edge == (0, 1)

    def test_all_ones(self):
        g = UnderlyingGraph(4, [(0, 1), (1, 2), (2, 3)])
        phi = GainGraph(g, "complex", {e: DualScalar.one("complex") for e in g.edges})
        assert phi.is_balanced()

    def test_reverse_gain_is_conjugate(self, balanced_triangle):
        g01 = balanced_triangle.gain(0, 1)
        g10 = balanced_triangle.gain(1, 0)
        assert g10 == g01.conjugate()
        assert (g01 * g10).allclose(DualScalar.one("complex"), 1e-12)


class TestWalkGain:
    def test_balanced_triangle_is_neutral(self, balanced_triangle):
        w = balanced_triangle.gain_of_walk([0, 1, 2, 0])
        assert w.allclose(DualScalar.one("complex"), 1e-12)

    def test_reversed_walk_is_conjugate(self, dual_spectrum_triangle):
        fwd = dual_spectrum_triangle.gain_of_walk([0, 1, 2, 0])
        rev = dual_spectrum_triangle.gain_of_walk([0, 2, 1, 0])
        assert rev.allclose(fwd.conjugate(), 1e-12)

    def test_single_edge(self, balanced_triangle):
        assert balanced_triangle.gain_of_walk([0, 1]) == balanced_triangle.gain(0, 1)

    def test_concatenation(self):
        rng = np.random.default_rng(2)
        phi = random_gain_graph(rng, random_connected_graph(rng, 6, 3), "quaternion")
        # random walk split at an interior point
        walk = [0]
        for _ in range(6):
            walk.append(int(rng.choice(phi.graph.neighbors(walk[-1]))))
        w = phi.gain_of_walk(walk)
        w1 = phi.gain_of_walk(walk[:4])
        w2 = phi.gain_of_walk(walk[3:])
        assert w.allclose(w1 * w2, 1e-12)

    def test_not_a_walk(self, balanced_triangle):
        with pytest.raises(NotAWalkError):
            balanced_triangle.gain_of_walk([0])
        g = UnderlyingGraph(4, [(0, 1), (2, 3)])
        phi = GainGraph(g, "real", {e: DualScalar.one("real") for e in g.edges})
        with pytest.raises(NotAWalkError):
            phi.gain_of_walk([0, 2])


class TestSwitching:
    def test_identity_fixes_gains(self, dual_spectrum_triangle):
        phi = dual_spectrum_triangle
        same = phi.switch([DualScalar.one("complex")] * phi.n)
        for u, v, g in phi.gains():
            assert same.gain(u, v).allclose(g, 1e-12)

    def test_composition(self):
        rng = np.random.default_rng(3)
        phi = random_gain_graph(rng, random_connected_graph(rng, 5, 2), "complex")
        z1 = random_switching(rng, "complex", 5)
        z2 = random_switching(rng, "complex", 5)
        once = phi.switch(z1).switch(z2)
        combined = phi.switch([a * b for a, b in zip(z1, z2)])
        for u, v, g in once.gains():
            assert combined.gain(u, v).allclose(g, 1e-10)

    def test_cycle_gains_collapse_to_closing_edge(self):
        # switching with the cumulative-prefix function moves the whole cycle
        # gain onto the closing edge
        rng = np.random.default_rng(4)
        n = 6
        graph = UnderlyingGraph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
        phi = random_gain_graph(rng, graph, "quaternion")
        total = phi.gain_of_walk(list(range(n)) + [0])
        zeta = [DualScalar.one("quaternion")]
        prefix = DualScalar.one("quaternion")
        for i in range(1, n):
            prefix = prefix * phi.gain(i - 1, i)
            zeta.append(prefix.inverse())
        switched = phi.switch(zeta)
        one = DualScalar.one("quaternion")
        for i in range(n - 1):
            assert switched.gain(i, i + 1).allclose(one, 1e-10)
        assert switched.gain(n - 1, 0).allclose(total, 1e-10)

    def test_switching_preserves_balance(self):
        rng = np.random.default_rng(5)
        for ring in RINGS:
            graph = random_connected_graph(rng, 7, 3)
            for phi in (random_balanced_gain_graph(rng, graph, ring),
                        random_gain_graph(rng, graph, ring)):
                zeta = random_switching(rng, ring, 7)
                assert phi.switch(zeta).is_balanced() == phi.is_balanced()


class TestNegate:
    def test_involution(self, dual_spectrum_triangle):
        phi = dual_spectrum_triangle
        back = phi.negate().negate()
        for u, v, g in phi.gains():
            assert back.gain(u, v).allclose(g, 1e-15)

    def test_all_ones_to_all_minus_ones(self):
        g = UnderlyingGraph(3, [(0, 1), (1, 2)])
        phi = GainGraph(g, "real", {e: DualScalar.one("real") for e in g.edges})
        neg = phi.negate()
        assert all(gn == DualScalar.real(-1) for _, _, gn in neg.gains())

    def test_antibalance_definition(self):
        g = UnderlyingGraph(3, [(0, 1), (0, 2), (1, 2)])
        minus = GainGraph(g, "real", {e: DualScalar.real(-1) for e in g.edges})
        # odd cycle with all -1 gains: unbalanced but antibalanced
        assert not minus.is_balanced()
        assert minus.is_antibalanced()


class TestBalanceCertificate:
    def test_balanced_triangle_with_potential(self, balanced_triangle):
        cert = balanced_triangle.balance_certificate()
        assert cert.balanced
        for u, v, g in balanced_triangle.gains():
            predicted = cert.theta[u].inverse() * cert.theta[v]
            assert g.allclose(predicted, 1e-9)

    def test_unbalanced_triangle_witness(self, real_spectrum_triangle):
        cert = real_spectrum_triangle.balance_certificate()
        assert not cert.balanced
        w = cert.witness_cycle
        assert w[0] == w[-1] and len(set(w[:-1])) == len(w) - 1
        gain = real_spectrum_triangle.gain_of_walk(w)
        assert not gain.allclose(DualScalar.one("complex"), 1e-6)

    def test_trees_are_balanced(self):
        rng = np.random.default_rng(6)
        for ring in RINGS:
            tree = random_connected_graph(rng, 8, 0)
            phi = random_gain_graph(rng, tree, ring)
            assert phi.balance_certificate().balanced

    def test_potential_generated_graphs_are_balanced(self):
        rng = np.random.default_rng(7)
        for ring in RINGS:
            graph = random_connected_graph(rng, 8, 4)
            phi = random_balanced_gain_graph(rng, graph, ring)
            cert = phi.balance_certificate()
            assert cert.balanced
            for u, v, g in phi.gains():
                assert g.allclose(cert.theta[u].inverse() * cert.theta[v], 1e-9)

    def test_unbalanced_sampler_certifies(self):
        rng = np.random.default_rng(8)
        phi = random_unbalanced_connected(rng, 7, "complex")
        assert not phi.balance_certificate().balanced

    def test_disconnected_graph_per_component(self):
        rng = np.random.default_rng(9)
        # two triangles: one balanced (all ones), one unbalanced
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        g = UnderlyingGraph(6, edges)
        one = DualScalar.one("complex")
        gains = {e: one for e in g.edges}
        phi = GainGraph(g, "complex", gains)
        assert phi.balance_certificate().balanced
        gains[(3, 4)] = DualScalar.complex(1j)
        phi2 = GainGraph(g, "complex", gains)
        cert = phi2.balance_certificate()
        assert not cert.balanced
        assert set(cert.witness_cycle) <= {3, 4, 5}


class TestInducedSubgraph:
    def test_full_subset_is_identity(self, balanced_triangle):
        sub = balanced_triangle.induced_subgraph(range(3))
        for u, v, g in balanced_triangle.gains():
            assert sub.gain(u, v) == g

    def test_drop_last_vertex(self, balanced_triangle):
        sub = balanced_triangle.induced_subgraph([0, 1])
        assert sub.graph.edges == ((0, 1),)
        assert sub.gain(0, 1) == DualScalar.complex(1, -1j)

    def test_empty_subset(self, balanced_triangle):
        sub = balanced_triangle.induced_subgraph([])
        assert sub.n == 0 and sub.graph.m == 0

    def test_relabeling(self):
        rng = np.random.default_rng(10)
        phi = random_gain_graph(rng, random_connected_graph(rng, 6, 3), "complex")
        sub = phi.induced_subgraph([1, 3, 5])
        for (u, v) in sub.graph.edges:
            orig = ([1, 3, 5][u], [1, 3, 5][v])
            assert sub.gain(u, v) == phi.gain(*orig)
