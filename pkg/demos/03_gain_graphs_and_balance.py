"""Gain graphs, walk gains, switching, and balance certificates.

A gain graph is balanced when every cycle gain is neutral; equivalently the
gains come from a vertex potential.  The certificate either returns the
potential or a concrete cycle that violates neutrality.
"""

import math

import numpy as np

from dualgain import DualScalar, GainGraph, UnderlyingGraph
from dualgain.sampling import random_balanced_gain_graph, random_connected_graph, random_switching

S2 = math.sqrt(2.0)

triangle = UnderlyingGraph(3, [(0, 1), (0, 2), (1, 2)])

balanced = GainGraph(triangle, "complex", {
    (0, 1): DualScalar.complex(1, -1j),
    (0, 2): DualScalar.complex(-1j),
    (1, 2): DualScalar.complex(-1j, 1),
})
unbalanced = GainGraph(triangle, "complex", {
    (0, 1): DualScalar.complex(1, -1j),
    (0, 2): DualScalar.complex((1 - 1j) / S2),
    (1, 2): DualScalar.complex(-1j, 1),
})

print("=== walk gains ===")
print(f"balanced triangle, cycle gain:   {balanced.gain_of_walk([0, 1, 2, 0])}")
print(f"unbalanced triangle, cycle gain: {unbalanced.gain_of_walk([0, 1, 2, 0])}")

print()
print("=== balance certificates ===")
cert = balanced.balance_certificate()
print(f"balanced? {cert.balanced}; potential:")
for v, t in enumerate(cert.theta):
    print(f"  theta[{v}] = {t}")
print("every edge satisfies gain(u,v) = theta[u]^-1 theta[v]:")
for u, v, g in balanced.gains():
    print(f"  ({u},{v}): {g.allclose(cert.theta[u].inverse() * cert.theta[v], 1e-9)}")

cert2 = unbalanced.balance_certificate()
print(f"unbalanced? {not cert2.balanced}; witness cycle {cert2.witness_cycle} "
      f"with gain {unbalanced.gain_of_walk(cert2.witness_cycle)}")

print()
print("=== switching preserves balance and spectra ===")
rng = np.random.default_rng(0)
zeta = random_switching(rng, "complex", 3)
switched = unbalanced.switch(zeta)
print(f"still unbalanced after a random switch: {not switched.is_balanced()}")
print(f"cycle gain is conjugated, real part invariant: "
      f"{switched.gain_of_walk([0, 1, 2, 0]).real_part()} vs "
      f"{unbalanced.gain_of_walk([0, 1, 2, 0]).real_part()}")

print()
print("=== potentials generate balanced graphs on any topology ===")
graph = random_connected_graph(rng, 7, 4)
phi = random_balanced_gain_graph(rng, graph, "quaternion")
print(f"random quaternion gain graph on {graph.n} vertices, {graph.m} edges: "
      f"balanced = {phi.is_balanced()}")
print(f"negate it: antibalanced = {phi.negate().is_antibalanced()}")
