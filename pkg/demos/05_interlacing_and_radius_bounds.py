"""Interlacing and spectral-radius bounds.

Eigenvalues of a principal submatrix nest between those of the full matrix
under the dual order.  The spectral radius of a gain graph never exceeds
the radius of its underlying graph; equality characterizes balance (and,
for the Laplacian against the signless Laplacian, antibalance).
"""

import numpy as np

from dualgain import (
    DualScalar,
    KIND_ADJACENCY,
    KIND_LAPLACIAN,
    check_interlacing,
    cycle_graph,
    radius_report,
    spectral_radius,
    spectrum,
)
from dualgain.sampling import (
    random_balanced_gain_graph,
    random_connected_graph,
    random_gain_graph,
    random_unbalanced_connected,
)

rng = np.random.default_rng(5)

print("=== interlacing under vertex deletion ===")
phi = random_gain_graph(rng, random_connected_graph(rng, 7, 3), "complex")
report = check_interlacing(phi, range(5), KIND_ADJACENCY)
print(f"full spectrum:   {[round(v.std, 4) for v in report.values_full]}")
print(f"subset spectrum: {[round(v.std, 4) for v in report.values_sub]}")
print(f"lambda_i >= mu_i:        {list(report.upper_ok)}")
print(f"mu_i >= lambda_(n+i-k):  {list(report.lower_ok)}")
print(f"holds: {report.holds}")

print()
print("=== deletion chains stay interlaced ===")
keep = list(range(7))
while len(keep) > 1:
    keep = keep[:-1]
    r = check_interlacing(phi, keep, KIND_LAPLACIAN)
    print(f"  keep {len(keep)} vertices: holds = {r.holds}")

print()
print("=== radius bounds, adjacency ===")
unb = random_unbalanced_connected(rng, 7, "quaternion")
rep = radius_report(unb, KIND_ADJACENCY)
print(f"rho(gain)  = {rep.rho_gain.std:.6f} {rep.rho_gain.dual:+.6f}eps")
print(f"rho(graph) = {rep.rho_graph:.6f},  Delta = {rep.delta_bound:.0f}")
print(f"strictly below the underlying radius (unbalanced): "
      f"{rep.rho_gain.std < rep.rho_graph}")

bal = random_balanced_gain_graph(rng, cycle_graph(6, DualScalar.one("complex")).graph,
                                 "complex")
rep = radius_report(bal, KIND_ADJACENCY)
print(f"balanced 2-regular cycle: equality {rep.equality} "
      f"(rho = {rep.rho_gain.std:.1f} = Delta = {rep.delta_bound:.0f})")

print()
print("=== radius bounds, Laplacian vs signless Laplacian ===")
neg = bal.negate()     # switching-equivalent to the all-(-1) gain
rep = radius_report(neg, KIND_LAPLACIAN)
print(f"negated balanced cycle: rho_L = {rep.rho_gain.std:.1f}, "
      f"rho_Q(G) = {rep.rho_graph:.1f}, 2 Delta = {rep.delta_bound:.0f}")
print(f"equality flagged: {rep.equality}, antibalanced: {rep.antibalanced}, "
      f"consistent: {rep.consistent}")

print()
print("=== the dual order picks radii apart ===")
vals = spectrum(unb, with_vectors=False).values
rho = spectral_radius(vals)
print("eigenvalue magnitudes:")
for v in vals:
    m = v.magnitude()
    print(f"   |{v.std:+.4f}{v.dual:+.4f}eps| = {m.std:.4f}{m.dual:+.4f}eps")
print(f"spectral radius: {rho.std:.4f}{rho.dual:+.4f}eps")
