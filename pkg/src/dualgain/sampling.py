"""Seeded random instances for tests and the property-check suites.

Unit dual elements are drawn so the unit condition holds exactly up to
rounding: complex gains as e**(i theta_s) with dual part i theta_d p_s, and
quaternion gains by projecting a raw dual part against the standard part.
Dual real units are just +-1 (their dual part must vanish).
"""

from __future__ import annotations

import math

import numpy as np

from .gain_graph import GainGraph, UnderlyingGraph
from .linalg import DualMatrix
from .quaternion import Quaternion
from .scalars import (
    DualScalar,
    RING_COMPLEX,
    RING_QUATERNION,
    RING_REAL,
)


def random_unit_scalar(rng: np.random.Generator, ring: str) -> DualScalar:
    if ring == RING_REAL:
        return DualScalar.real(1.0 if rng.random() < 0.5 else -1.0, 0.0)
    if ring == RING_COMPLEX:
        theta_s = rng.uniform(-math.pi, math.pi)
        theta_d = rng.normal()
        ps = complex(math.cos(theta_s), math.sin(theta_s))
        return DualScalar.complex(ps, 1j * theta_d * ps)
    qs = Quaternion.from_components(rng.normal(size=4))
    qs = qs * (1.0 / abs(qs))
    raw = Quaternion.from_components(rng.normal(size=4))
    pd = raw - qs * (qs.conjugate() * raw).w
    return DualScalar.quaternion(qs, pd)


def random_scalar(rng: np.random.Generator, ring: str, scale: float = 1.0) -> DualScalar:
    """A generic (not unit) dual scalar with Gaussian components."""
    if ring == RING_REAL:
        return DualScalar.real(scale * rng.normal(), scale * rng.normal())
    if ring == RING_COMPLEX:
        s = complex(rng.normal(), rng.normal()) * scale
        d = complex(rng.normal(), rng.normal()) * scale
        return DualScalar.complex(s, d)
    s = Quaternion.from_components(scale * rng.normal(size=4))
    d = Quaternion.from_components(scale * rng.normal(size=4))
    return DualScalar.quaternion(s, d)


def random_dual_quaternion(rng: np.random.Generator, kind: str = "generic") -> DualScalar:
    """Dual quaternions for exercising the complex reduction, including its
    degenerate branches."""
    if kind == "generic":
        return random_scalar(rng, RING_QUATERNION)
    if kind == "real_std":
        s = Quaternion(rng.normal())
        d = Quaternion.from_components(rng.normal(size=4))
        return DualScalar.quaternion(s, d)
    if kind == "complex_form":
        s = Quaternion(rng.normal(), rng.normal())
        d = Quaternion(rng.normal(), rng.normal())
        return DualScalar.quaternion(s, d)
    if kind == "dual_real":
        return DualScalar.quaternion(Quaternion(rng.normal()), Quaternion(rng.normal()))
    if kind == "negative_i_axis":
        # vector part along -i, where the naive rotation construction degenerates
        s = Quaternion(rng.normal(), -abs(rng.normal()))
        d = Quaternion.from_components(rng.normal(size=4))
        return DualScalar.quaternion(s, d)
    raise ValueError(f"unknown kind {kind!r}")


def random_switching(rng: np.random.Generator, ring: str, n: int) -> list[DualScalar]:
    return [random_unit_scalar(rng, ring) for _ in range(n)]


def random_hermitian_matrix(rng: np.random.Generator, ring: str, n: int,
                            scale: float = 1.0) -> DualMatrix:
    grid = [[random_scalar(rng, ring, scale) for _ in range(n)] for _ in range(n)]
    a = DualMatrix.from_scalars(grid)
    h = a + a.conj_transpose()
    return DualMatrix(ring, 0.5 * h.s, 0.5 * h.d)


def random_connected_graph(rng: np.random.Generator, n: int,
                           extra_edges: int = 0) -> UnderlyingGraph:
    """Random spanning tree plus extra distinct non-tree edges."""
    edges = set()
    order = rng.permutation(n)
    for idx in range(1, n):
        v = int(order[idx])
        u = int(order[rng.integers(0, idx)])
        edges.add((min(u, v), max(u, v)))
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)
                  if (u, v) not in edges]
    rng.shuffle(candidates)
    for e in candidates[:extra_edges]:
        edges.add(e)
    return UnderlyingGraph(n, sorted(edges))


def random_gain_graph(rng: np.random.Generator, graph: UnderlyingGraph,
                      ring: str) -> GainGraph:
    gains = {e: random_unit_scalar(rng, ring) for e in graph.edges}
    return GainGraph(graph, ring, gains)


def random_balanced_gain_graph(rng: np.random.Generator, graph: UnderlyingGraph,
                               ring: str) -> GainGraph:
    """Gains derived from a random potential, so the graph is balanced."""
    theta = [random_unit_scalar(rng, ring) for _ in range(graph.n)]
    gains = {(u, v): theta[u].inverse() * theta[v] for u, v in graph.edges}
    return GainGraph(graph, ring, gains)


def random_unbalanced_connected(rng: np.random.Generator, n: int, ring: str,
                                extra_edges: int = 2, tol: float = 1e-9,
                                max_tries: int = 256) -> GainGraph:
    """Connected graph with a certified unbalanced, non-antibalanced gain
    assignment (the strict-inequality case of the radius bound).

    Signed graphs need at least two independent cycles for that to be
    possible (an unbalanced odd cycle is automatically antibalanced), hence
    the floor on n and extra edges for the real ring.
    """
    if n < 3:
        raise ValueError("need n >= 3 for an unbalanced graph")
    if ring == RING_REAL:
        if n < 4:
            raise ValueError("signed graphs need n >= 4 to be unbalanced and "
                             "not antibalanced")
        extra_edges = max(2, extra_edges)
    for _ in range(max_tries):
        graph = random_connected_graph(rng, n, max(1, extra_edges))
        phi = random_gain_graph(rng, graph, ring)
        if not phi.balance_certificate(tol).balanced and not phi.is_antibalanced(tol):
            return phi
    raise RuntimeError("failed to sample an unbalanced graph")
