#!/usr/bin/env python3
"""Classification of every catalog example and the theorem cross-checks.

For each example the script measures: horizontal conformality and the
dilatation, total geodesy, fiber geometry, integrability, harmonicity, and
then the conformality of the frame-bundle lift both predicted (from the
base-map properties) and measured (from Mok Gram matrices of a pushed
orthogonal basis).

Two measured facts deserve attention, and both are printed below:

* the warped example measures as lift-conformal with unit dilatation even
  though it is not totally geodesic: with a one-dimensional horizontal
  space and a one-dimensional fiber, the adapted orthonormal bundle has
  discrete fibers, and the directions that would detect the failure simply
  do not exist in the bundle;

* the flat projection's lift is harmonic onto its image, but its ambient
  tension inside the full target frame bundle equals the curvature of the
  rotation-group image circle, 1/sqrt(2).
"""

import numpy as np

from framelift.catalog import entries
from framelift.geometry import sample_points
from framelift.submersion import classify, derive_geometry, lift_tension_direct


def show(flag):
    return {True: "yes", False: "no", None: "???"}[flag]


print(f"{'id':4s} {'lambda':>8s} {'conf':>5s} {'tot.geo':>8s} {'fibers':>7s} "
      f"{'integ':>6s} {'harm':>5s} {'hm':>4s} {'lift pred':>10s} {'lift meas':>10s} "
      f"{'Lambda':>8s} {'agree':>6s}")
for e in entries():
    geom = derive_geometry(e.phi)
    pts = sample_points(e.phi.source, 42, 4)
    r = classify(e.phi, pts, geom=geom)
    lam = np.mean(r.dilatation_samples)
    Lam = np.mean(r.lift_lambda_samples)
    print(f"{e.id:4s} {lam:8.4f} {show(r.horizontally_conformal):>5s} "
          f"{show(r.totally_geodesic):>8s} {show(r.fibers_totally_geodesic):>7s} "
          f"{show(r.h_integrable):>6s} {show(r.harmonic):>5s} "
          f"{show(r.harmonic_morphism):>4s} {show(r.lift_conformal_predicted):>10s} "
          f"{show(r.lift_conformal_measured):>10s} {Lam:8.4f} "
          f"{show(r.verdicts_agree):>6s}")

print("""
Reading the table:
  E1, E2, E5: conformal, totally geodesic, constant dilatation; their lifts
      measure as conformal with the same dilatation: the positive branch.
  E3 (Hopf):  a harmonic morphism downstairs, but not totally geodesic; the
      lift measures decisively non-conformal: the negative branch.
  E4 (warped): predicted non-conformal but MEASURED conformal.  This is a
      genuine counterexample to the two-sided expectation in the lowest
      dimensions; the verdict disagreement is reported, not hidden.
""")

e1 = entries()[0]
geom1 = derive_geometry(e1.phi)
res = lift_tension_direct(geom1, np.array([0.2, -0.3, 0.4]))
print("Direct tension of the flat-projection lift, computed with the")
print("brute-force total-space machinery (4-dim source chart into the")
print("6-dim frame-bundle chart):")
print(f"  ambient norm     {res['ambient']:.6f}   (= 1/sqrt(2) = {1 / np.sqrt(2):.6f})")
print(f"  tangential norm  {res['tangential']:.2e}   (harmonic onto its image)")
print(f"  normal norm      {res['normal']:.6f}   (curvature of the image circle)")
