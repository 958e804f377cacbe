"""Canonical charted submersions with exact metadata.

Five examples drive every verification suite: a flat projection, a product
projection, the Hopf fibration of the round 3-sphere onto the half-radius
2-sphere, a warped plane projecting onto its base line, and a homothety
composed with a flat projection.  Each entry carries exact metric
derivatives, an exact Jacobian, smooth vertical fields, expected flags,
and a sampling box away from chart singularities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import Array, ChartManifold, VectorField, box_sampler
from .submersion import SubmersionSpec


# ---------------------------------------------------------------------------
# chart builders
# ---------------------------------------------------------------------------

def euclidean_chart(n: int, half_width: float = 1.5, name: str = "") -> ChartManifold:
    eye = np.eye(n)

    return ChartManifold(
        dim=n,
        metric_field=lambda p: eye.copy(),
        metric_derivative=lambda p: np.zeros((n, n, n)),
        domain_predicate=lambda p: bool(np.all(np.abs(p) < 10.0)),
        domain_sampler=box_sampler([-half_width] * n, [half_width] * n),
        orthonormal_frame=lambda p: eye.copy(),
        orthonormal_frame_derivative=lambda p: np.zeros((n, n, n)),
        name=name or f"R^{n}",
    )


def sphere_chart(n: int, scale: float = 1.0, box: float = 0.6, name: str = "") -> ChartManifold:
    """Stereographic chart of the round n-sphere.

    The metric is the conformal one ``scale * 4 / (1 + |x|^2)^2`` times the
    identity; scale 1 gives the unit sphere, scale 1/4 the sphere of radius
    one half.
    """
    s = 4.0 * scale

    def conf(p: Array) -> float:
        return s / (1.0 + float(p @ p)) ** 2

    def metric(p: Array) -> Array:
        return conf(p) * np.eye(n)

    def dmetric(p: Array) -> Array:
        w = 1.0 + float(p @ p)
        out = np.zeros((n, n, n))
        for k in range(n):
            out[k] = (-4.0 * s * p[k] / w**3) * np.eye(n)
        return out

    def frame(p: Array) -> Array:
        return np.eye(n) / np.sqrt(conf(p))

    def dframe(p: Array) -> Array:
        w = 1.0 + float(p @ p)
        out = np.zeros((n, n, n))
        for k in range(n):
            # d_k of w / sqrt(s) times the identity
            out[k] = (2.0 * p[k] / np.sqrt(s)) * np.eye(n)
        return out

    return ChartManifold(
        dim=n,
        metric_field=metric,
        metric_derivative=dmetric,
        domain_predicate=lambda p: bool(p @ p < 4.0),
        domain_sampler=box_sampler([-box] * n, [box] * n),
        orthonormal_frame=frame,
        orthonormal_frame_derivative=dframe,
        name=name or f"S^{n}(stereo, scale={scale})",
    )


def product_sphere_circle_chart(box: float = 0.5, name: str = "S2xS1") -> ChartManifold:
    """Product of the unit 2-sphere (stereographic) with a unit circle angle."""
    n = 3

    def conf(p: Array) -> float:
        r2 = float(p[0] ** 2 + p[1] ** 2)
        return 4.0 / (1.0 + r2) ** 2

    def metric(p: Array) -> Array:
        g = np.eye(n)
        g[0, 0] = g[1, 1] = conf(p)
        return g

    def dmetric(p: Array) -> Array:
        r2 = float(p[0] ** 2 + p[1] ** 2)
        w = 1.0 + r2
        out = np.zeros((n, n, n))
        for k in range(2):
            out[k, 0, 0] = out[k, 1, 1] = -16.0 * p[k] / w**3
        return out

    def frame(p: Array) -> Array:
        E = np.eye(n)
        c = 1.0 / np.sqrt(conf(p))
        E[0, 0] = E[1, 1] = c
        return E

    def dframe(p: Array) -> Array:
        out = np.zeros((n, n, n))
        for k in range(2):
            out[k, 0, 0] = out[k, 1, 1] = p[k]
        return out

    return ChartManifold(
        dim=n,
        metric_field=metric,
        metric_derivative=dmetric,
        domain_predicate=lambda p: bool(p[0] ** 2 + p[1] ** 2 < 4.0),
        domain_sampler=box_sampler([-box, -box, -1.0], [box, box, 1.0]),
        orthonormal_frame=frame,
        orthonormal_frame_derivative=dframe,
        name=name,
    )


def warped_plane_chart(name: str = "warped") -> ChartManifold:
    """Plane with metric diag(1, e^{2t}) in coordinates (t, s)."""

    def metric(p: Array) -> Array:
        return np.diag([1.0, np.exp(2.0 * p[0])])

    def dmetric(p: Array) -> Array:
        out = np.zeros((2, 2, 2))
        out[0, 1, 1] = 2.0 * np.exp(2.0 * p[0])
        return out

    def frame(p: Array) -> Array:
        return np.diag([1.0, np.exp(-p[0])])

    def dframe(p: Array) -> Array:
        out = np.zeros((2, 2, 2))
        out[0, 1, 1] = -np.exp(-p[0])
        return out

    return ChartManifold(
        dim=2,
        metric_field=metric,
        metric_derivative=dmetric,
        domain_predicate=lambda p: bool(abs(p[0]) < 3.0),
        domain_sampler=box_sampler([-0.5, -1.0], [0.5, 1.0]),
        orthonormal_frame=frame,
        orthonormal_frame_derivative=dframe,
        name=name,
    )


def line_chart(name: str = "R") -> ChartManifold:
    return euclidean_chart(1, half_width=1.5, name=name)


# ---------------------------------------------------------------------------
# the Hopf map in stereographic charts
# ---------------------------------------------------------------------------

def _stereo_inverse_s3(x: Array) -> Array:
    """Chart point in R^3 to the unit 3-sphere in R^4 (projection from the north pole)."""
    w = 1.0 + float(x @ x)
    return np.concatenate([2.0 * x, [float(x @ x) - 1.0]]) / w


def _stereo_inverse_s3_jac(x: Array) -> Array:
    w = 1.0 + float(x @ x)
    J = np.zeros((4, 3))
    for i in range(3):
        for j in range(3):
            J[i, j] = 2.0 * (1.0 if i == j else 0.0) / w - 4.0 * x[i] * x[j] / w**2
        J[3, i] = 4.0 * x[i] / w**2
    return J


def _hopf_ambient(P: Array) -> Array:
    """Unit vector (2 Re z1 conj(z2), 2 Im z1 conj(z2), |z1|^2 - |z2|^2)."""
    p1, p2, p3, p4 = P
    return np.array([
        2.0 * (p1 * p3 + p2 * p4),
        2.0 * (p2 * p3 - p1 * p4),
        p1 * p1 + p2 * p2 - p3 * p3 - p4 * p4,
    ])


def _hopf_ambient_jac(P: Array) -> Array:
    p1, p2, p3, p4 = P
    return np.array([
        [2.0 * p3, 2.0 * p4, 2.0 * p1, 2.0 * p2],
        [-2.0 * p4, 2.0 * p3, 2.0 * p2, -2.0 * p1],
        [2.0 * p1, 2.0 * p2, -2.0 * p3, -2.0 * p4],
    ])


def _stereo_s2(m: Array) -> Array:
    return m[:2] / (1.0 - m[2])


def _stereo_s2_jac(m: Array) -> Array:
    d = 1.0 - m[2]
    return np.array([
        [1.0 / d, 0.0, m[0] / d**2],
        [0.0, 1.0 / d, m[1] / d**2],
    ])


def hopf_map(x: Array) -> Array:
    return _stereo_s2(_hopf_ambient(_stereo_inverse_s3(x)))


def hopf_jacobian(x: Array) -> Array:
    P = _stereo_inverse_s3(x)
    m = _hopf_ambient(P)
    return _stereo_s2_jac(m) @ _hopf_ambient_jac(P) @ _stereo_inverse_s3_jac(x)


def hopf_vertical_field() -> VectorField:
    """The fiber direction of the Hopf map pulled into the stereographic chart."""

    def ev(x: Array) -> Array:
        P = _stereo_inverse_s3(x)
        V = np.array([-P[1], P[0], -P[3], P[2]])  # multiplication by i upstairs
        return (V[:3] + x * V[3]) / (1.0 - P[3])

    return VectorField(eval=ev)


# ---------------------------------------------------------------------------
# entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """A charted submersion with its expected geometric flags."""

    id: str
    phi: SubmersionSpec
    expected_lambda: Optional[float]  # None means non-constant
    totally_geodesic: bool
    fibers_totally_geodesic: bool
    h_integrable: bool
    harmonic_morphism: bool
    lift_conformal: bool
    expected_big_lambda: Optional[float]
    description: str = ""

    def __post_init__(self):
        lam_const = self.expected_lambda is not None
        if self.lift_conformal != (lam_const and self.totally_geodesic):
            raise ValueError(
                f"entry {self.id}: lift_conformal flag inconsistent with "
                "[constant dilatation and totally geodesic]"
            )


def _coordinate_project_field(i: int, n: int) -> VectorField:
    e = np.zeros(n)
    e[i] = 1.0
    return VectorField(eval=lambda p, e=e: e.copy(), jacobian=lambda p: np.zeros((n, n)))


def _build_entries() -> list[CatalogEntry]:
    out = []

    # E1: flat projection of R^3 onto R^2
    src = euclidean_chart(3, name="R3")
    tgt = euclidean_chart(2, name="R2")
    J1 = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    out.append(CatalogEntry(
        id="E1",
        phi=SubmersionSpec(
            source=src, target=tgt,
            map=lambda p: p[:2].copy(),
            jacobian=lambda p: J1.copy(),
            vertical_fields=[_coordinate_project_field(2, 3)],
            name="flat-projection",
        ),
        expected_lambda=1.0, totally_geodesic=True, fibers_totally_geodesic=True,
        h_integrable=True, harmonic_morphism=True, lift_conformal=True,
        expected_big_lambda=1.0,
        description="orthogonal projection of flat 3-space onto a flat plane",
    ))

    # E2: product projection of S^2 x S^1 onto S^2
    src = product_sphere_circle_chart()
    tgt = sphere_chart(2, scale=1.0, box=0.5, name="S2")
    J2 = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    out.append(CatalogEntry(
        id="E2",
        phi=SubmersionSpec(
            source=src, target=tgt,
            map=lambda p: p[:2].copy(),
            jacobian=lambda p: J2.copy(),
            vertical_fields=[_coordinate_project_field(2, 3)],
            name="product",
        ),
        expected_lambda=1.0, totally_geodesic=True, fibers_totally_geodesic=True,
        h_integrable=True, harmonic_morphism=True, lift_conformal=True,
        expected_big_lambda=1.0,
        description="projection of the metric product sphere-times-circle onto the sphere",
    ))

    # E3: Hopf fibration S^3 -> S^2(1/2)
    src = sphere_chart(3, scale=1.0, box=0.4, name="S3")
    tgt = sphere_chart(2, scale=0.25, box=1.5, name="S2(1/2)")
    out.append(CatalogEntry(
        id="E3",
        phi=SubmersionSpec(
            source=src, target=tgt,
            map=hopf_map,
            jacobian=hopf_jacobian,
            vertical_fields=[hopf_vertical_field()],
            name="hopf",
        ),
        expected_lambda=1.0, totally_geodesic=False, fibers_totally_geodesic=True,
        h_integrable=False, harmonic_morphism=True, lift_conformal=False,
        expected_big_lambda=None,
        description="Hopf fibration of the round 3-sphere over the half-radius 2-sphere",
    ))

    # E4: warped plane onto its base line
    src = warped_plane_chart()
    tgt = line_chart()
    J4 = np.array([[1.0, 0.0]])
    out.append(CatalogEntry(
        id="E4",
        phi=SubmersionSpec(
            source=src, target=tgt,
            map=lambda p: p[:1].copy(),
            jacobian=lambda p: J4.copy(),
            vertical_fields=[_coordinate_project_field(1, 2)],
            name="warped",
        ),
        expected_lambda=1.0, totally_geodesic=False, fibers_totally_geodesic=False,
        h_integrable=True, harmonic_morphism=False, lift_conformal=False,
        expected_big_lambda=None,
        description="warped product projecting onto the base; fibers are not minimal",
    ))

    # E5: homothety (factor 2) composed with the flat projection
    src = euclidean_chart(3, name="R3")
    tgt = euclidean_chart(2, half_width=3.5, name="R2")
    c = 2.0
    J5 = c * np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    out.append(CatalogEntry(
        id="E5",
        phi=SubmersionSpec(
            source=src, target=tgt,
            map=lambda p: c * p[:2],
            jacobian=lambda p: J5.copy(),
            vertical_fields=[_coordinate_project_field(2, 3)],
            name="homothety-projection",
        ),
        expected_lambda=c * c, totally_geodesic=True, fibers_totally_geodesic=True,
        h_integrable=True, harmonic_morphism=True, lift_conformal=True,
        expected_big_lambda=c * c,
        description="scaling homothety after the flat projection; dilatation 4",
    ))
    return out


_ENTRIES = {e.id: e for e in _build_entries()}


def entries() -> list[CatalogEntry]:
    return [_ENTRIES[k] for k in sorted(_ENTRIES)]


def get(entry_id: str) -> CatalogEntry:
    if entry_id not in _ENTRIES:
        raise KeyError(f"unknown catalog entry {entry_id!r}; known: {sorted(_ENTRIES)}")
    return _ENTRIES[entry_id]
