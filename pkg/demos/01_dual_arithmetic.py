"""Dual scalars in the three base rings.

A dual element a_s + a_d*eps truncates products at first order (eps**2 = 0).
This script walks through the arithmetic: products, conjugation, magnitudes,
the unit condition, inverses, and the total order on dual numbers.
"""

import numpy as np

from dualgain import DualNumber, DualScalar, Quaternion

print("=== dual reals ===")
a = DualScalar.real(1.0, 2.0)
b = DualScalar.real(3.0, -4.0)
print(f"a = {a}")
print(f"b = {b}")
print(f"a + b = {a + b}")
print(f"a * b = {a * b}        # eps**2 term dropped")
print(f"(1 + eps)(1 - eps) = {DualScalar.real(1, 1) * DualScalar.real(1, -1)}")

print()
print("=== dual complex ===")
c = DualScalar.complex(3 + 4j, 1 + 2j)
print(f"c            = {c}")
print(f"conjugate(c) = {c.conjugate()}")
print(f"|c|          = {c.magnitude()}   # dual number: |c_s| + Re(c_s* c_d)/|c_s| eps")
print(f"c * c^-1     = {c * c.inverse()}")

print()
print("=== dual quaternions (noncommutative) ===")
i, j = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)
qi = DualScalar.quaternion(i)
qj = DualScalar.quaternion(j)
print(f"i * j = {qi * qj}")
print(f"j * i = {qj * qi}")

print()
print("=== unit dual elements form a group ===")
u = DualScalar.complex(1j, 0.5)         # |1j| = 1 and the cross term vanishes
v = DualScalar.complex(np.exp(0.3j), 0.2j * np.exp(0.3j))
print(f"u unit? {u.is_unit()}   v unit? {v.is_unit()}   u*v unit? {(u * v).is_unit()}")
print(f"|u * v| = {(u * v).magnitude()}")

print()
print("=== the dual-number order is lexicographic ===")
x, y, z = DualNumber(1, 5), DualNumber(2, 0), DualNumber(1, -3)
print(f"{x} < {y}: {x < y}   (standard parts decide)")
print(f"{z} < {x}: {z < x}   (dual parts break ties)")
print("sorted descending:", sorted([x, y, z], key=lambda t: (-t.std, -t.dual)))
