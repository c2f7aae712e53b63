"""Dual vectors and matrices, the dual Hermitian eigendecomposition, and the
Moore determinant.

A dual matrix A = A_s + A_d*eps is stored as two base-ring numpy arrays (see
_rings for the quaternion split layout).  The eigendecomposition works at
first order: standard parts come from a dense Hermitian solve of A_s,
repeated standard eigenvalues are refined through the supplement matrix
W* A_d W of their eigenvector block, and eigenvector dual parts come from
the first-order sum over the remaining eigendirections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _rings as rings
from .errors import (
    NotHermitianError,
    RingMismatchError,
    ShapeMismatchError,
    SizeCapExceededError,
)
from .scalars import DEFAULT_TOL, DualNumber, DualScalar, RING_QUATERNION


class DualVector:
    """A dense vector of dual scalars with a uniform ring tag."""

    __slots__ = ("ring", "s", "d")

    def __init__(self, ring, s, d=None):
        rings.check_ring(ring)
        self.ring = ring
        self.s = _freeze(_as_part(ring, s, vector=True))
        if d is None:
            d = np.zeros_like(self.s)
        self.d = _freeze(_as_part(ring, d, vector=True))
        if self.s.shape != self.d.shape:
            raise ShapeMismatchError("standard and dual parts differ in shape")

    @classmethod
    def from_scalars(cls, entries) -> "DualVector":
        entries = list(entries)
        if not entries:
            raise ShapeMismatchError("empty vector needs an explicit ring")
        ring = entries[0].ring
        s = rings.zeros(ring, (len(entries),))
        d = rings.zeros(ring, (len(entries),))
        for i, e in enumerate(entries):
            if e.ring != ring:
                raise RingMismatchError("mixed rings in vector entries")
            rings.put(ring, s, (i,), e.std)
            rings.put(ring, d, (i,), e.dual)
        return cls(ring, s, d)

    @property
    def n(self) -> int:
        return self.s.shape[0]

    def entry(self, i) -> DualScalar:
        return DualScalar(self.ring, rings.get(self.ring, self.s, (i,)),
                          rings.get(self.ring, self.d, (i,)))

    def __len__(self):
        return self.n

    def __add__(self, other):
        self._check(other)
        return DualVector(self.ring, self.s + other.s, self.d + other.d)

    def __sub__(self, other):
        self._check(other)
        return DualVector(self.ring, self.s - other.s, self.d - other.d)

    def __neg__(self):
        return DualVector(self.ring, -self.s, -self.d)

    def _check(self, other):
        if not isinstance(other, DualVector):
            raise ShapeMismatchError(f"expected DualVector, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        if other.n != self.n:
            raise ShapeMismatchError(f"length mismatch: {self.n} vs {other.n}")

    def dot(self, other: "DualVector") -> DualScalar:
        """x^H y (conjugation on self)."""
        self._check(other)
        std = rings.vdot(self.ring, self.s, other.s)
        dual = rings.vdot(self.ring, self.s, other.d) + rings.vdot(self.ring, self.d, other.s)
        return DualScalar(self.ring, std, dual)

    def is_appreciable(self, tol: float = DEFAULT_TOL) -> bool:
        return rings.max_abs(self.ring, self.s) > tol

    def norm(self, tol: float = DEFAULT_TOL) -> DualNumber:
        """Two-branch 2-norm: infinitesimal vectors get norm |x_d| eps."""
        ns = float((rings.entry_abs(self.ring, self.s) ** 2).sum())
        if ns > tol * tol:
            cross = rings.vdot(self.ring, self.s, self.d)
            sq = DualNumber(ns, 2.0 * _real_of(cross))
            return sq.sqrt()
        nd = float(np.sqrt((rings.entry_abs(self.ring, self.d) ** 2).sum()))
        return DualNumber(0.0, nd)

    def scale_right(self, scalar) -> "DualVector":
        """Right multiplication x * a by a dual scalar (order matters for
        quaternions)."""
        a = scalar if isinstance(scalar, DualScalar) else DualScalar(self.ring, scalar)
        if a.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {a.ring}")
        s = rings.scale_right(self.ring, self.s, a.std)
        d = (rings.scale_right(self.ring, self.s, a.dual)
             + rings.scale_right(self.ring, self.d, a.std))
        return DualVector(self.ring, s, d)

    def allclose(self, other: "DualVector", tol: float = DEFAULT_TOL) -> bool:
        return (self.ring == other.ring and self.n == other.n
                and rings.max_abs(self.ring, self.s - other.s) <= tol
                and rings.max_abs(self.ring, self.d - other.d) <= tol)

    def __repr__(self):
        return f"DualVector({self.ring!r}, n={self.n})"


class DualMatrix:
    """A dense matrix of dual scalars with a uniform ring tag."""

    __slots__ = ("ring", "s", "d")

    def __init__(self, ring, s, d=None):
        rings.check_ring(ring)
        self.ring = ring
        self.s = _freeze(_as_part(ring, s, vector=False))
        if d is None:
            d = np.zeros_like(self.s)
        self.d = _freeze(_as_part(ring, d, vector=False))
        if self.s.shape != self.d.shape:
            raise ShapeMismatchError("standard and dual parts differ in shape")

    # constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, ring, n_rows, n_cols=None) -> "DualMatrix":
        n_cols = n_rows if n_cols is None else n_cols
        return cls(ring, rings.zeros(ring, (n_rows, n_cols)))

    @classmethod
    def identity(cls, ring, n) -> "DualMatrix":
        return cls(ring, rings.eye(ring, n))

    @classmethod
    def from_scalars(cls, grid) -> "DualMatrix":
        grid = [list(row) for row in grid]
        if not grid or not grid[0]:
            raise ShapeMismatchError("empty matrix needs an explicit ring")
        ring = grid[0][0].ring
        n, m = len(grid), len(grid[0])
        s = rings.zeros(ring, (n, m))
        d = rings.zeros(ring, (n, m))
        for i, row in enumerate(grid):
            if len(row) != m:
                raise ShapeMismatchError("ragged rows")
            for j, e in enumerate(row):
                if e.ring != ring:
                    raise RingMismatchError("mixed rings in matrix entries")
                rings.put(ring, s, (i, j), e.std)
                rings.put(ring, d, (i, j), e.dual)
        return cls(ring, s, d)

    # shape / access ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.s.shape[0], self.s.shape[1]

    @property
    def n_rows(self) -> int:
        return self.s.shape[0]

    @property
    def n_cols(self) -> int:
        return self.s.shape[1]

    def entry(self, i, j) -> DualScalar:
        return DualScalar(self.ring, rings.get(self.ring, self.s, (i, j)),
                          rings.get(self.ring, self.d, (i, j)))

    def column(self, j) -> DualVector:
        return DualVector(self.ring, self.s[:, j], self.d[:, j])

    # arithmetic ------------------------------------------------------

    def _check(self, other, same_shape=True):
        if not isinstance(other, DualMatrix):
            raise ShapeMismatchError(f"expected DualMatrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        if same_shape and other.shape != self.shape:
            raise ShapeMismatchError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check(other)
        return DualMatrix(self.ring, self.s + other.s, self.d + other.d)

    def __sub__(self, other):
        self._check(other)
        return DualMatrix(self.ring, self.s - other.s, self.d - other.d)

    def __neg__(self):
        return DualMatrix(self.ring, -self.s, -self.d)

    def __matmul__(self, other):
        if isinstance(other, DualVector):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
            if self.n_cols != other.n:
                raise ShapeMismatchError(f"cannot apply {self.shape} to length {other.n}")
            s = rings.matvec(self.ring, self.s, other.s)
            d = (rings.matvec(self.ring, self.s, other.d)
                 + rings.matvec(self.ring, self.d, other.s))
            return DualVector(self.ring, s, d)
        self._check(other, same_shape=False)
        if self.n_cols != other.n_rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        s = rings.matmul(self.ring, self.s, other.s)
        d = (rings.matmul(self.ring, self.s, other.d)
             + rings.matmul(self.ring, self.d, other.s))
        return DualMatrix(self.ring, s, d)

    # structure -------------------------------------------------------

    def conj_transpose(self) -> "DualMatrix":
        return DualMatrix(self.ring, rings.conj_transpose(self.ring, self.s),
                          rings.conj_transpose(self.ring, self.d))

    @property
    def H(self) -> "DualMatrix":
        return self.conj_transpose()

    def hermitian_defect(self) -> float:
        return max(rings.hermitian_defect(self.ring, self.s),
                   rings.hermitian_defect(self.ring, self.d))

    def is_hermitian(self, tol: float = 1e-9) -> bool:
        return self.n_rows == self.n_cols and self.hermitian_defect() <= tol

    def inverse(self) -> "DualMatrix":
        """B with B_s = A_s^-1 and B_d = -A_s^-1 A_d A_s^-1."""
        if self.n_rows != self.n_cols:
            raise ShapeMismatchError("inverse needs a square matrix")
        s_inv = rings.inv(self.ring, self.s)
        d_inv = -rings.matmul(self.ring, s_inv, rings.matmul(self.ring, self.d, s_inv))
        return DualMatrix(self.ring, s_inv, d_inv)

    def frobenius_parts(self) -> tuple[float, float]:
        return rings.frobenius(self.ring, self.s), rings.frobenius(self.ring, self.d)

    def max_abs_parts(self) -> tuple[float, float]:
        return rings.max_abs(self.ring, self.s), rings.max_abs(self.ring, self.d)

    def allclose(self, other: "DualMatrix", tol: float = DEFAULT_TOL) -> bool:
        return (self.ring == other.ring and self.shape == other.shape
                and rings.max_abs(self.ring, self.s - other.s) <= tol
                and rings.max_abs(self.ring, self.d - other.d) <= tol)

    def __repr__(self):
        return f"DualMatrix({self.ring!r}, shape={self.shape})"


def _as_part(ring, data, vector):
    arr = np.array(data, copy=True)
    base_dims = 1 if vector else 2
    if ring == RING_QUATERNION:
        if arr.ndim != base_dims + 1 or arr.shape[-1] != 2:
            raise ShapeMismatchError("quaternion parts use split shape (..., 2)")
        return arr.astype(np.complex128)
    if arr.ndim != base_dims:
        raise ShapeMismatchError(f"expected a {base_dims}-d array")
    if ring == "real":
        if np.iscomplexobj(arr):
            raise RingMismatchError("complex data in a real-ring part")
        return arr.astype(np.float64)
    return arr.astype(np.complex128)


def _freeze(arr):
    arr.flags.writeable = False
    return arr


def _real_of(value) -> float:
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return value.real
    return value.w


def principal_submatrix(a: DualMatrix, subset) -> DualMatrix:
    """Rows and columns restricted to a vertex subset (in sorted order)."""
    idx = np.ix_(sorted(set(int(i) for i in subset)), sorted(set(int(i) for i in subset)))
    return DualMatrix(a.ring, a.s[idx], a.d[idx])


# ---------------------------------------------------------------------------
# dual Hermitian eigendecomposition


@dataclass(frozen=True)
class EigenPair:
    """One eigenvalue (a dual number) with its unit eigenvector."""

    value: DualNumber
    vector: DualVector


def hermitian_eigendecomposition(a: DualMatrix, hermitian_tol: float = 1e-9,
                                 cluster_tol: float = 1e-8) -> list[EigenPair]:
    """All n eigenpairs of a dual Hermitian matrix, sorted descending under
    the dual-number order.

    Standard parts are the eigenvalues of A_s.  Standard eigenvalues whose
    relative gap is below cluster_tol are treated as one cluster: their dual
    parts are the eigenvalues of the supplement matrix W* A_d W, and the
    eigenvector block W is rotated into the basis that diagonalizes it.
    Eigenvector dual parts are the first-order sums over the out-of-cluster
    directions.  Output is deterministic: each eigenvector is gauged so its
    first appreciable standard entry is positive real.
    """
    if a.n_rows != a.n_cols:
        raise NotHermitianError("matrix is not square")
    defect = a.hermitian_defect()
    if defect > hermitian_tol:
        raise NotHermitianError(f"hermitian defect {defect:.3e} exceeds {hermitian_tol:.3e}")
    ring = a.ring
    n = a.n_rows
    if n == 0:
        return []

    s_part = rings.symmetrize(ring, np.array(a.s))
    d_part = rings.symmetrize(ring, np.array(a.d))
    w, v = rings.eigh(ring, s_part)
    v = np.array(v)

    clusters = _cluster_indices(w, cluster_tol)
    lam_d = np.zeros(n)
    for cl in clusters:
        block = v[:, cl]
        supp = rings.matmul(ring, rings.conj_transpose(ring, block),
                            rings.matmul(ring, d_part, block))
        supp = rings.symmetrize(ring, supp)
        if len(cl) == 1:
            lam_d[cl[0]] = _real_of(rings.get(ring, supp, (0, 0)))
        else:
            dvals, z = rings.eigh(ring, supp)
            lam_d[cl] = dvals
            v[:, cl] = rings.matmul(ring, block, z)

    gram = rings.matmul(ring, rings.conj_transpose(ring, v),
                        rings.matmul(ring, d_part, v))
    x_d = rings.zeros(ring, (n, n))
    in_cluster = np.empty(n, dtype=int)
    for ci, cl in enumerate(clusters):
        in_cluster[cl] = ci
    for i in range(n):
        outside = np.flatnonzero(in_cluster != in_cluster[i])
        if outside.size == 0:
            continue
        coeffs = gram[outside, i]
        denom = w[i] - w[outside]
        if ring == RING_QUATERNION:
            coeffs = coeffs / denom[:, None]
            x_d[:, i] = rings.matmul(ring, v[:, outside], coeffs[:, None])[:, 0]
        else:
            x_d[:, i] = v[:, outside] @ (coeffs / denom)

    pairs = []
    for i in range(n):
        vec = DualVector(ring, v[:, i], x_d[:, i])
        vec = _gauge_fix(vec)
        pairs.append(EigenPair(DualNumber(float(w[i]), float(lam_d[i])), vec))
    pairs.sort(key=lambda p: (-p.value.std, -p.value.dual))
    return pairs


def _cluster_indices(w, cluster_tol):
    clusters = []
    start = 0
    for i in range(1, len(w)):
        gap_cap = cluster_tol * max(1.0, abs(w[i]), abs(w[i - 1]))
        if w[i] - w[i - 1] > gap_cap:
            clusters.append(np.arange(start, i))
            start = i
    clusters.append(np.arange(start, len(w)))
    return clusters


def _gauge_fix(vec: DualVector, threshold: float = 1e-8) -> DualVector:
    mags = rings.entry_abs(vec.ring, vec.s)
    idx = int(np.argmax(mags > threshold)) if (mags > threshold).any() else int(np.argmax(mags))
    lead = rings.get(vec.ring, vec.s, (idx,))
    m = abs(lead)
    if m == 0.0:
        return vec
    u = _conj_of(lead) * (1.0 / m)
    return vec.scale_right(DualScalar(vec.ring, u))


def _conj_of(value):
    if isinstance(value, float):
        return value
    return value.conjugate()


# ---------------------------------------------------------------------------
# Moore determinant


def moore_determinant(a: DualMatrix, size_cap: int = 9,
                      hermitian_tol: float = 1e-9) -> DualScalar:
    """Permutation-sum determinant for dual Hermitian matrices.

    Each permutation is written as disjoint cycles with the minimal index
    first inside every cycle and cycles ordered by decreasing leading index;
    entry products follow that exact order, which makes the sum well defined
    over the quaternions.  Equals the product of the eigenvalues.
    """
    n = a.n_rows
    if a.n_cols != n:
        raise NotHermitianError("matrix is not square")
    if n > size_cap:
        raise SizeCapExceededError(f"n={n} exceeds the size cap {size_cap}")
    defect = a.hermitian_defect()
    if defect > hermitian_tol:
        raise NotHermitianError(f"hermitian defect {defect:.3e} exceeds {hermitian_tol:.3e}")

    entries = [[a.entry(i, j) for j in range(n)] for i in range(n)]
    cycle_products: dict[tuple, DualScalar] = {}

    def product_of(cyc):
        cached = cycle_products.get(cyc)
        if cached is None:
            cached = DualScalar.one(a.ring)
            for u, v in zip(cyc, cyc[1:] + (cyc[0],)):
                cached = cached * entries[u][v]
            cycle_products[cyc] = cached
        return cached

    total = DualScalar.zero(a.ring)
    for perm in itertools.permutations(range(n)):
        cycles = _canonical_cycles(perm)
        sign = -1.0 if (n - len(cycles)) % 2 else 1.0
        prod = DualScalar.one(a.ring)
        for cyc in cycles:
            prod = prod * product_of(cyc)
        total = total + (prod if sign > 0 else -prod)
    return total


def _canonical_cycles(perm):
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: -c[0])
    return cycles


# ---------------------------------------------------------------------------
# complex-adjoint embedding (public surface for the quaternion solve)


def quaternion_adjoint_embed(q: np.ndarray) -> np.ndarray:
    """Embed a split quaternion matrix (n, m, 2) as [[A1, A2],
    [-conj(A2), conj(A1)]]."""
    q = np.asarray(q, dtype=np.complex128)
    if q.ndim != 3 or q.shape[-1] != 2:
        raise ShapeMismatchError("expected a split quaternion array of shape (n, m, 2)")
    return rings.embed_quaternion(q)


def quaternion_adjoint_unembed(m: np.ndarray) -> np.ndarray:
    """Read a split quaternion matrix back off an embedded complex matrix."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] % 2 or m.shape[1] % 2:
        raise ShapeMismatchError("expected an even-sized complex matrix")
    return rings.unembed_quaternion(m)


def quaternion_hermitian_eigensystem(q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and split eigenvectors of a quaternion
    Hermitian matrix; the doubled embedding spectrum is de-duplicated and one
    quaternion eigenvector is recovered per eigenvalue."""
    q = np.asarray(q, dtype=np.complex128)
    if q.ndim != 3 or q.shape[-1] != 2 or q.shape[0] != q.shape[1]:
        raise ShapeMismatchError("expected a square split quaternion array")
    return rings.eigh(RING_QUATERNION, q)
