"""Adjacency and Laplacian spectra of dual unit gain graphs, closed forms
for paths and cycles, spectral radii, interlacing checks and radius bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _rings as rings
from . import linalg
from .errors import BadParameterError, RingMismatchError
from .gain_graph import GainGraph
from .linalg import DualMatrix, DualVector
from .scalars import (
    DualNumber,
    DualScalar,
    RING_COMPLEX,
    RING_QUATERNION,
    RING_REAL,
    dual_geq,
)
from .transcendental import DualAngle, dual_cos, reduce_to_complex, unit_to_angle

KIND_ADJACENCY = "adjacency"
KIND_LAPLACIAN = "laplacian"
_KINDS = (KIND_ADJACENCY, KIND_LAPLACIAN)


def _check_kind(kind):
    if kind not in _KINDS:
        raise BadParameterError(f"matrix kind must be one of {_KINDS}, got {kind!r}")


@dataclass(frozen=True)
class Spectrum:
    """Dual-number eigenvalues sorted descending, with optional eigenvectors."""

    kind: str
    values: tuple
    vectors: tuple | None = None

    def __len__(self):
        return len(self.values)

    def to_dict(self, include_vectors: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "values": [{"std": v.std, "dual": v.dual} for v in self.values],
        }
        if include_vectors and self.vectors is not None:
            out["vectors"] = [
                {
                    "std": [list(c) for c in _vector_components(vec)[0]],
                    "dual": [list(c) for c in _vector_components(vec)[1]],
                }
                for vec in self.vectors
            ]
        return out


def _vector_components(vec: DualVector):
    stds, duals = [], []
    for i in range(vec.n):
        e = vec.entry(i)
        s, d = e.components()
        stds.append(s)
        duals.append(d)
    return stds, duals


def adjacency_matrix(phi: GainGraph) -> DualMatrix:
    """a_ij = gain(i -> j) on edges, zero elsewhere; Hermitian by construction."""
    n = phi.n
    s = rings.zeros(phi.ring, (n, n))
    d = rings.zeros(phi.ring, (n, n))
    for u, v, g in phi.gains():
        rings.put(phi.ring, s, (u, v), g.std)
        rings.put(phi.ring, d, (u, v), g.dual)
        gc = g.conjugate()
        rings.put(phi.ring, s, (v, u), gc.std)
        rings.put(phi.ring, d, (v, u), gc.dual)
    return DualMatrix(phi.ring, s, d)


def laplacian_matrix(phi: GainGraph) -> DualMatrix:
    """L = D - A with D the (real) degree diagonal."""
    a = adjacency_matrix(phi)
    s = -np.array(a.s)
    d = -np.array(a.d)
    for v, deg in enumerate(phi.graph.degrees()):
        if phi.ring == RING_QUATERNION:
            s[v, v, 0] += deg
        else:
            s[v, v] += deg
    return DualMatrix(phi.ring, s, d)


def gain_matrix(phi: GainGraph, kind: str) -> DualMatrix:
    _check_kind(kind)
    return adjacency_matrix(phi) if kind == KIND_ADJACENCY else laplacian_matrix(phi)


def spectrum(phi: GainGraph, kind: str = KIND_ADJACENCY, *,
             hermitian_tol: float = 1e-9, cluster_tol: float = 1e-8,
             with_vectors: bool = True) -> Spectrum:
    """Eigendecompose the chosen matrix, sorted descending under the dual order."""
    pairs = linalg.hermitian_eigendecomposition(
        gain_matrix(phi, kind), hermitian_tol=hermitian_tol, cluster_tol=cluster_tol)
    values = tuple(p.value for p in pairs)
    vectors = tuple(p.vector for p in pairs) if with_vectors else None
    return Spectrum(kind, values, vectors)


# ---------------------------------------------------------------------------
# closed forms


def path_spectrum_closed_form(n: int, kind: str = KIND_ADJACENCY) -> Spectrum:
    """Paths are balanced, so gains are irrelevant: 2 cos(pi j / (n + 1)) for
    the adjacency matrix, 2 - 2 cos(pi j / n) for the Laplacian."""
    _check_kind(kind)
    if n < 1:
        raise BadParameterError("a path needs at least one vertex")
    if kind == KIND_ADJACENCY:
        vals = [DualNumber(2.0 * math.cos(math.pi * j / (n + 1)), 0.0)
                for j in range(1, n + 1)]
    else:
        vals = [DualNumber(2.0 - 2.0 * math.cos(math.pi * j / n), 0.0)
                for j in range(n)]
    vals.sort(key=lambda v: (-v.std, -v.dual))
    return Spectrum(kind, tuple(vals))


def cycle_spectrum_closed_form(n: int, gain: DualScalar, kind: str = KIND_ADJACENCY,
                               tol: float = 1e-9) -> Spectrum:
    """Closed-form cycle spectrum from the total cycle gain.

    For a dual complex unit gain with angle theta the adjacency eigenvalues
    are 2 cos((theta + 2 pi j) / n) and the Laplacian ones 2 minus that,
    j = 0..n-1, evaluated with the dual cosine.  Dual quaternion gains are
    reduced to a similar dual complex number first; dual real gains embed
    into the complex ring.
    """
    _check_kind(kind)
    if n < 3:
        raise BadParameterError("a cycle needs at least three vertices")
    if not isinstance(gain, DualScalar):
        raise RingMismatchError("gain must be a dual scalar")
    q = gain
    if q.ring == RING_QUATERNION:
        q, _ = reduce_to_complex(q)
    elif q.ring == RING_REAL:
        q = q.widen(RING_COMPLEX)
    theta = unit_to_angle(q, tol)
    vals = []
    for j in range(n):
        angle = DualAngle((theta.std + 2.0 * math.pi * j) / n, theta.dual / n)
        c = dual_cos(angle)
        if kind == KIND_ADJACENCY:
            vals.append(DualNumber(2.0 * c.std, 2.0 * c.dual))
        else:
            vals.append(DualNumber(2.0 - 2.0 * c.std, -2.0 * c.dual))
    return Spectrum(kind, tuple(_merge_degenerate_and_sort(vals)))


def _merge_degenerate_and_sort(vals):
    """Descending dual-order sort that ignores rounding noise in the
    standard parts.

    Angles theta and -theta give mathematically equal standard parts whose
    floating-point cosines can differ in the last bit; without merging, that
    noise (not the dual parts) would decide the order of a degenerate pair.
    """
    vals = sorted(vals, key=lambda v: -v.std)
    out = []
    i = 0
    while i < len(vals):
        j = i
        while (j + 1 < len(vals)
               and vals[i].std - vals[j + 1].std <= 1e-12 * max(1.0, abs(vals[i].std))):
            j += 1
        group = vals[i:j + 1]
        mean_std = sum(v.std for v in group) / len(group)
        out.extend(sorted((DualNumber(mean_std, v.dual) for v in group),
                          key=lambda v: -v.dual))
        i = j + 1
    return out


# ---------------------------------------------------------------------------
# radii, interlacing, bound reports


def spectral_radius(spec) -> DualNumber:
    """Largest |eigenvalue| under the dual-number order."""
    values = spec.values if isinstance(spec, Spectrum) else tuple(spec)
    if not values:
        raise BadParameterError("spectral radius of an empty spectrum")
    best = None
    for v in values:
        m = v.magnitude()
        if best is None or m > best:
            best = m
    return best


@dataclass(frozen=True)
class InterlacingReport:
    """Per-inequality verdicts for one induced-subgraph interlacing check."""

    kind: str
    subset: tuple
    values_full: tuple
    values_sub: tuple
    upper_ok: tuple      # lambda_i >= mu_i
    lower_ok: tuple      # mu_i >= lambda_{n + i - k}
    holds: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "subset": list(self.subset),
            "values_full": [{"std": v.std, "dual": v.dual} for v in self.values_full],
            "values_sub": [{"std": v.std, "dual": v.dual} for v in self.values_sub],
            "upper_ok": list(self.upper_ok),
            "lower_ok": list(self.lower_ok),
            "holds": self.holds,
        }


def check_interlacing(phi: GainGraph, subset, kind: str = KIND_ADJACENCY,
                      slack: float = 1e-9) -> InterlacingReport:
    """Verify lambda_i >= mu_i >= lambda_{n+i-k} on a vertex subset.

    Both theorems compare against the principal submatrix on S.  For the
    adjacency matrix that is exactly A of the induced subgraph; for the
    Laplacian the diagonal keeps the degrees of the full graph (the induced
    subgraph's own Laplacian does not interlace in general).  Comparisons
    use the tolerance-aware dual order: standard parts within slack defer
    to dual parts with the same slack.
    """
    subset = tuple(sorted(set(int(v) for v in subset)))
    if not subset:
        raise BadParameterError("subset must be nonempty")
    lam = spectrum(phi, kind, with_vectors=False).values
    sub = linalg.principal_submatrix(gain_matrix(phi, kind), subset)
    mu = tuple(p.value for p in linalg.hermitian_eigendecomposition(sub))
    n, k = len(lam), len(mu)
    upper = tuple(dual_geq(lam[i], mu[i], slack) for i in range(k))
    lower = tuple(dual_geq(mu[i], lam[n - k + i], slack) for i in range(k))
    return InterlacingReport(kind, subset, lam, mu, upper, lower,
                             all(upper) and all(lower))


@dataclass(frozen=True)
class RadiusReport:
    """Spectral radius of a gain graph against its underlying-graph bounds.

    For the adjacency kind the comparison radius is rho_A(G) and the degree
    bound is Delta; for the Laplacian kind they are rho_Q(G) (signless
    Laplacian) and 2 Delta.  For connected graphs the equality flag is
    cross-checked against balance: adjacency equality holds exactly for
    balanced or antibalanced graphs, Laplacian equality exactly for graphs
    switching-equivalent to the all-(-1) gain.
    """

    kind: str
    rho_gain: DualNumber
    rho_graph: float
    delta_bound: float
    bound_holds: bool
    delta_bound_holds: bool
    equality: bool
    connected: bool
    balanced: bool
    antibalanced: bool
    equality_predicted: bool | None
    consistent: bool | None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rho_gain": {"std": self.rho_gain.std, "dual": self.rho_gain.dual},
            "rho_graph": self.rho_graph,
            "delta_bound": self.delta_bound,
            "bound_holds": self.bound_holds,
            "delta_bound_holds": self.delta_bound_holds,
            "equality": self.equality,
            "connected": self.connected,
            "balanced": self.balanced,
            "antibalanced": self.antibalanced,
            "equality_predicted": self.equality_predicted,
            "consistent": self.consistent,
        }


def underlying_radius(phi: GainGraph, kind: str = KIND_ADJACENCY) -> float:
    """rho_A(G) for the adjacency kind, rho_Q(G) = rho(D + A) for the
    Laplacian kind."""
    _check_kind(kind)
    if phi.n == 0:
        raise BadParameterError("radius of an empty graph")
    a = phi.graph.adjacency()
    if kind == KIND_LAPLACIAN:
        a = a + np.diag(phi.graph.degrees().astype(float))
    w = np.linalg.eigvalsh(a)
    return float(np.abs(w).max())


def radius_report(phi: GainGraph, kind: str = KIND_ADJACENCY, *,
                  equality_tol: float = 1e-8, bound_tol: float = 1e-12,
                  balance_tol: float = 1e-9) -> RadiusReport:
    _check_kind(kind)
    rho_gain = spectral_radius(spectrum(phi, kind, with_vectors=False))
    rho_graph = underlying_radius(phi, kind)
    delta = float(phi.graph.max_degree())
    delta_bound = delta if kind == KIND_ADJACENCY else 2.0 * delta
    bound_holds = rho_gain.std <= rho_graph + bound_tol
    delta_bound_holds = rho_gain.std <= delta_bound + bound_tol
    equality = (abs(rho_gain.std - rho_graph) <= equality_tol
                and abs(rho_gain.dual) <= equality_tol)
    connected = phi.graph.is_connected()
    balanced = phi.is_balanced(balance_tol)
    antibalanced = phi.is_antibalanced(balance_tol)
    if connected:
        predicted = (balanced or antibalanced) if kind == KIND_ADJACENCY else antibalanced
        consistent = predicted == equality
    else:
        predicted = None
        consistent = None
    return RadiusReport(kind, rho_gain, rho_graph, delta_bound, bound_holds,
                        delta_bound_holds, equality, connected, balanced,
                        antibalanced, predicted, consistent)
