#!/usr/bin/env python3
"""Distributions, the adapted connection, and the adapted frame bundle.

The warped plane (metric diag(1, e^{2t})) projecting onto its first
coordinate carries the simplest non-parallel horizontal distribution: the
difference tensor S, the torsion, the W endomorphism, and the adapted
horizontal lift all have closed forms to compare against.
"""

import numpy as np

from framelift.adapted import (
    S_endo,
    S_tensor,
    W_endo,
    adapted_frame,
    adapted_horizontal_lift,
    block_decompose,
    curvature_relation_residual,
    od_tangency_residual,
    projector_defects,
    torsion_TD,
)
from framelift.catalog import get
from framelift.geometry import TangentVector, coordinate_field, metric_eval
from framelift.submersion import derive_geometry

entry = get("E4")
phi = entry.phi
geom = derive_geometry(phi)
M, D = phi.source, geom.horizontal
p = np.array([0.3, 0.2])
t0 = p[0]

print("== the distribution ==")
print("projector onto the horizontal line field:")
print(D.projector(p))
print("defects:", projector_defects(M, D, p))

print("\n== the difference tensor ==")
S = S_tensor(M, D, coordinate_field(1, 2), coordinate_field(1, 2), p)
print("S_ds ds =", S.components, "  closed form: (-e^{2t}, 0) =",
      (-np.exp(2 * t0), 0.0))
print("S as an endomorphism for the unit vertical direction:")
e_s = np.array([0.0, np.exp(-t0)])
print(S_endo(M, D, e_s, p))

print("\n== torsion and block structure ==")
td = torsion_TD(M, D, coordinate_field(0, 2), coordinate_field(1, 2), p)
print("torsion of the two coordinate fields:", td.components,
      "(the two one-dimensional blocks are both integrable)")
b = block_decompose(np.arange(4.0).reshape(2, 2), D, p)
print("block reassembly residual:",
      np.max(np.abs(b.reassemble() - np.arange(4.0).reshape(2, 2))))

print("\n== the W endomorphism ==")
u = adapted_frame(M, D, p)
onb = [TangentVector(p, u.columns[:, i]) for i in range(2)]
W = W_endo(M, D, p, onb)
print("W in the adapted orthonormal frame (closed form diag(1, 3)):")
print(np.linalg.inv(u.columns) @ W @ u.columns)

print("\n== the curvature relation ==")
rng = np.random.default_rng(2)
x, y, z = rng.standard_normal((3, 2))
print("residual with the tensorial derivative convention:",
      curvature_relation_residual(M, D, x, y, z, p, convention="standard"))
print("residual with the displayed third-term convention:",
      curvature_relation_residual(M, D, x, y, z, p, convention="display"))

print("\n== the adapted horizontal lift ==")
x = rng.standard_normal(2)
t = adapted_horizontal_lift(M, D, TangentVector(p, x), u)
print("tangency of the lift to the adapted bundle (derivative of the")
print("membership constraints along the lift):",
      od_tangency_residual(M, D, t))
