"""Transcendental functions and the quaternion-to-complex reduction.

Unit dual complex numbers are exponentials of dual angles; n-th roots come
from dividing the angle.  Every dual quaternion is similar to a dual complex
number via an explicit unit dual quaternion, preserving the real part and
the magnitude of the imaginary part.
"""

import math

from dualgain import (
    DualAngle,
    DualScalar,
    Quaternion,
    dual_cos,
    dual_exp,
    dual_log,
    reduce_to_complex,
    unit_nth_roots,
    unit_to_angle,
)

print("=== exp and log ===")
a = DualScalar.complex(complex(math.cos(-math.pi / 4), math.sin(-math.pi / 4)),
                       (1 + 1j) / math.sqrt(2))
print(f"a        = {a}")
print(f"log(a)   = {dual_log(a)}")
print(f"exp(log) = {dual_exp(dual_log(a))}")

print()
print("=== dual angles and the dual cosine ===")
theta = unit_to_angle(a)
print(f"theta = {theta!r}    (a = e^(i theta), theta_d is real for units)")
print(f"cos(theta) = {dual_cos(theta)}")
print(f"2 cos(theta/3) = {DualScalar.real(2) * dual_cos(DualAngle(theta.std / 3, theta.dual / 3)).to_scalar()}")

print()
print("=== n-th roots of a unit ===")
for k, r in enumerate(unit_nth_roots(a, 3)):
    print(f"root {k}: {r}")
    print(f"   cubed back: {(r * r * r)}")

print()
print("=== dual quaternion -> dual complex similarity ===")
q = DualScalar.quaternion(Quaternion(0.3, 0.1, -1.2, 0.5),
                          Quaternion(1.0, -0.4, 0.2, 2.0))
red, u = reduce_to_complex(q)
print(f"q              = {q}")
print(f"a = u* q u     = {red}")
print(f"u              = {u}  (unit: {u.is_unit()})")
print(f"Re preserved:  {q.real_part()}  ->  {red.real_part()}")
im_q = (q - q.real_part().to_scalar('quaternion')).magnitude()
im_a = (red - red.real_part().to_scalar('complex')).magnitude()
print(f"|Im| preserved: {im_q}  ->  {im_a}")
residual = red.widen("quaternion") - u.conjugate() * q * u
print(f"residual |a - u*qu| = {residual.magnitude()}")
