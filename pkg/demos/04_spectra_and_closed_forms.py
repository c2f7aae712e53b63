"""Adjacency and Laplacian spectra; closed forms for paths and cycles.

Dual Hermitian matrices have exactly n dual-number eigenvalues.  Balanced
gain graphs reproduce the spectra of their underlying graphs; unbalanced
ones pick up genuinely dual eigenvalues.  For paths and cycles the whole
spectrum is available in closed form through the dual cosine.
"""

import math

import numpy as np

from dualgain import (
    DualScalar,
    GainGraph,
    UnderlyingGraph,
    adjacency_matrix,
    cycle_graph,
    cycle_spectrum_closed_form,
    path_graph,
    path_spectrum_closed_form,
    spectrum,
)
from dualgain.sampling import random_gain_graph

S2 = math.sqrt(2.0)
triangle = UnderlyingGraph(3, [(0, 1), (0, 2), (1, 2)])


def show(label, values):
    print(label)
    for v in values:
        print(f"   {v.std:+.4f} {v.dual:+.4f}*eps")


phi1 = GainGraph(triangle, "complex", {
    (0, 1): DualScalar.complex(1, -1j),
    (0, 2): DualScalar.complex(-1j),
    (1, 2): DualScalar.complex(-1j, 1),
})
phi3 = GainGraph(triangle, "complex", {
    (0, 1): DualScalar.complex(1, -1j),
    (0, 2): DualScalar.complex((1 - 1j) / S2),
    (1, 2): DualScalar.complex(-1j, 2),
})

print("=== two triangles, very different spectra ===")
show("balanced (plain integers, zero dual parts):",
     spectrum(phi1, with_vectors=False).values)
show("unbalanced (dual eigenvalues):",
     spectrum(phi3, with_vectors=False).values)

print()
print("=== eigenpairs satisfy A x = x lambda in dual arithmetic ===")
a = adjacency_matrix(phi3)
spec = spectrum(phi3)
for lam, x in zip(spec.values, spec.vectors):
    resid = (a @ x) - x.scale_right(lam.to_scalar("complex"))
    s, d = np.abs(resid.s).max(), np.abs(resid.d).max()
    print(f"   lambda = {lam.std:+.4f}{lam.dual:+.4f}eps   residual ({s:.1e}, {d:.1e})")

print()
print("=== the closed form knows the same numbers ===")
q = phi3.gain_of_walk([0, 1, 2, 0])
show(f"cycle closed form from the walk gain:",
     cycle_spectrum_closed_form(3, q).values)

print()
print("=== paths are balanced: gains never matter ===")
rng = np.random.default_rng(1)
n = 6
path = random_gain_graph(rng, path_graph(n, "complex").graph, "complex")
show(f"random-gain path on {n} vertices (dense eigensolver):",
     spectrum(path, with_vectors=False).values)
show("closed form 2 cos(pi j/(n+1)):",
     path_spectrum_closed_form(n).values)

print()
print("=== quaternion gains reduce to the complex case ===")
rng = np.random.default_rng(2)
qcyc = random_gain_graph(rng, cycle_graph(5, DualScalar.one("quaternion")).graph,
                         "quaternion")
qq = qcyc.gain_of_walk([0, 1, 2, 3, 4, 0])
show("dense quaternion eigensolver (complex-adjoint embedding):",
     spectrum(qcyc, with_vectors=False).values)
show("closed form after reduce_to_complex:",
     cycle_spectrum_closed_form(5, qq).values)
