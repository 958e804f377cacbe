"""Frame bundles over a chart: Mok metric, lifts, and total-space oracles.

The full frame bundle L(M) is charted as (x, E) with E the invertible
matrix of frame columns; the orthonormal bundle O(M) is charted near a
reference orthonormal frame field as (x, a) with u = E_ref(x) exp(A(a))
for a skew matrix A.  A brute-force Levi-Civita oracle on the induced
total-space metric audits every closed-form connection and bracket
identity used elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
import scipy.linalg

from .geometry import (
    Array,
    ChartManifold,
    DEFAULT_FD,
    EndomorphismField,
    FDConfig,
    TangentVector,
    VectorField,
    central_diff,
    christoffel,
    christoffel_contract,
    covariant_derivative,
    curvature_tensor,
    directional_diff,
    lie_bracket,
    metric_eval,
    orthonormal_basis,
    reference_frame,
)


@dataclass(frozen=True)
class Frame:
    """A frame of the tangent space at ``base``: column i of ``columns`` is u_i."""

    base: Array
    columns: Array

    def __post_init__(self):
        object.__setattr__(self, "base", np.asarray(self.base, dtype=float))
        object.__setattr__(self, "columns", np.asarray(self.columns, dtype=float))
        if self.columns.shape != (self.base.size, self.base.size):
            raise ValueError("frame matrix must be square of the chart dimension")

    def vector(self, i: int) -> Array:
        return self.columns[:, i]


@dataclass(frozen=True)
class FrameTangent:
    """Tangent vector to the frame-bundle total space at ``at``."""

    at: Frame
    base_rate: Array
    frame_rate: Array

    def __post_init__(self):
        object.__setattr__(self, "base_rate", np.asarray(self.base_rate, dtype=float))
        object.__setattr__(self, "frame_rate", np.asarray(self.frame_rate, dtype=float))
        if self.base_rate.shape != self.at.base.shape:
            raise ValueError("base rate has wrong shape")
        if self.frame_rate.shape != self.at.columns.shape:
            raise ValueError("frame rate has wrong shape")

    def __add__(self, other: "FrameTangent") -> "FrameTangent":
        _same_frame(self.at, other.at)
        return FrameTangent(self.at, self.base_rate + other.base_rate,
                            self.frame_rate + other.frame_rate)

    def __sub__(self, other: "FrameTangent") -> "FrameTangent":
        _same_frame(self.at, other.at)
        return FrameTangent(self.at, self.base_rate - other.base_rate,
                            self.frame_rate - other.frame_rate)

    def __mul__(self, c: float) -> "FrameTangent":
        return FrameTangent(self.at, c * self.base_rate, c * self.frame_rate)

    __rmul__ = __mul__


def _same_frame(u: Frame, v: Frame, tol: float = 1e-9) -> None:
    if np.max(np.abs(u.base - v.base)) > tol or np.max(np.abs(u.columns - v.columns)) > tol:
        raise ValueError("frame tangents are attached to different frames")


def frame_orthonormality_defect(M: ChartManifold, u: Frame) -> float:
    g = metric_eval(M, u.base)
    return float(np.max(np.abs(u.columns.T @ g @ u.columns - np.eye(M.dim))))


def zero_frame_tangent(u: Frame) -> FrameTangent:
    n = u.base.size
    return FrameTangent(u, np.zeros(n), np.zeros((n, n)))


# ---------------------------------------------------------------------------
# lifts, vertical vectors, Mok metric
# ---------------------------------------------------------------------------

def horizontal_lift_frame(
    M: ChartManifold, X: TangentVector, u: Frame, cfg: FDConfig = DEFAULT_FD
) -> FrameTangent:
    """Horizontal lift of X at the frame u: parallel transport of the columns."""
    if not np.array_equal(np.asarray(X.base, dtype=float), u.base):
        raise ValueError("vector and frame are based at different points")
    gamma = christoffel(M, u.base, cfg)
    gx = christoffel_contract(gamma, X.components)
    return FrameTangent(u, X.components.copy(), -gx @ u.columns)


def fundamental_vertical(P_value: Array, u: Frame) -> FrameTangent:
    """Vertical vector generated by the endomorphism value P at the frame u.

    Generated by the flow u -> u exp(t u^{-1} P u); in chart coordinates the
    frame rate is simply P E.
    """
    P_value = np.asarray(P_value, dtype=float)
    return FrameTangent(u, np.zeros(u.base.size), P_value @ u.columns)


def vertical_part(
    M: ChartManifold, t: FrameTangent, cfg: FDConfig = DEFAULT_FD
) -> Array:
    """Endomorphism value V with t = horizontal lift of base_rate + V*.

    The decomposition is exact: V = (Edot + Gamma_xdot E) E^{-1}.
    """
    u = t.at
    gamma = christoffel(M, u.base, cfg)
    gx = christoffel_contract(gamma, t.base_rate)
    return (t.frame_rate + gx @ u.columns) @ np.linalg.inv(u.columns)


def mok_metric(
    M: ChartManifold, s: FrameTangent, t: FrameTangent, cfg: FDConfig = DEFAULT_FD
) -> float:
    """Diagonal (Mok) metric on the frame bundle.

    Horizontal and vertical parts are orthogonal; two vertical vectors pair
    as sum_i g(V_s u_i, V_t u_i) over the frame columns.
    """
    _same_frame(s.at, t.at)
    u = s.at
    g = metric_eval(M, u.base)
    vs = vertical_part(M, s, cfg) @ u.columns
    vt = vertical_part(M, t, cfg) @ u.columns
    return float(s.base_rate @ g @ t.base_rate + np.einsum("ki,kl,li->", vs, g, vt))


def mok_norm(M: ChartManifold, t: FrameTangent, cfg: FDConfig = DEFAULT_FD) -> float:
    return float(np.sqrt(max(mok_metric(M, t, t, cfg), 0.0)))


def mok_gram(
    M: ChartManifold, basis: Sequence[FrameTangent], cfg: FDConfig = DEFAULT_FD
) -> Array:
    G = np.zeros((len(basis), len(basis)))
    for i, s in enumerate(basis):
        for j, t in enumerate(basis):
            if j < i:
                G[i, j] = G[j, i]
            else:
                G[i, j] = mok_metric(M, s, t, cfg)
    return G


def mok_orthonormalize(
    M: ChartManifold, basis: Sequence[FrameTangent], cfg: FDConfig = DEFAULT_FD
) -> list[FrameTangent]:
    """Gram-Schmidt in the Mok metric, deterministic in the given order."""
    out: list[FrameTangent] = []
    for t in basis:
        w = t
        for e in out:
            w = w - mok_metric(M, w, e, cfg) * e
        n = mok_norm(M, w, cfg)
        if n < 1e-12:
            raise ValueError("mok_orthonormalize: degenerate input")
        out.append((1.0 / n) * w)
    return out


# ---------------------------------------------------------------------------
# skew parameterizations and bundle charts
# ---------------------------------------------------------------------------

def skew_basis(n: int) -> list[Array]:
    """Basis E_ij - E_ji of so(n), pairs (i, j) with i < j in lexicographic order."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            B = np.zeros((n, n))
            B[i, j] = 1.0
            B[j, i] = -1.0
            out.append(B)
    return out


def block_skew_basis(n: int, k: int) -> list[Array]:
    """Basis of so(k) + so(n-k) embedded block-diagonally in so(n)."""
    out = []
    for B in skew_basis(k):
        M = np.zeros((n, n))
        M[:k, :k] = B
        out.append(M)
    for B in skew_basis(n - k):
        M = np.zeros((n, n))
        M[k:, k:] = B
        out.append(M)
    return out


def offdiag_skew_basis(n: int, k: int) -> list[Array]:
    """Basis of the complementary block (skew matrices mixing the two blocks)."""
    out = []
    for i in range(k):
        for j in range(k, n):
            B = np.zeros((n, n))
            B[i, j] = 1.0
            B[j, i] = -1.0
            out.append(B)
    return out


class FrameChart:
    """Chart (x, a) on a subbundle of O(M): u = E_ref(x) exp(A(a)).

    ``basis`` spans the allowed skew directions: all of so(n) for O(M),
    the block-diagonal subalgebra for a bundle adapted to a distribution.
    Valid near a = 0; all checks in this package are pointwise and local.
    """

    def __init__(
        self,
        M: ChartManifold,
        basis: Optional[Sequence[Array]] = None,
        reference: Optional[Callable[[Array], Array]] = None,
        reference_derivative: Optional[Callable[[Array], Array]] = None,
        name: str = "O(M)",
    ):
        self.manifold = M
        self.basis = list(basis) if basis is not None else skew_basis(M.dim)
        self._reference = reference
        self._reference_derivative = reference_derivative
        self.name = name
        self.dim = M.dim + len(self.basis)

    # -- coordinates ------------------------------------------------------

    def split(self, q: Array) -> tuple[Array, Array]:
        q = np.asarray(q, dtype=float)
        return q[: self.manifold.dim], q[self.manifold.dim :]

    def join(self, x: Array, a: Array) -> Array:
        return np.concatenate([np.asarray(x, dtype=float), np.asarray(a, dtype=float)])

    def skew_from_coords(self, a: Array) -> Array:
        A = np.zeros((self.manifold.dim, self.manifold.dim))
        for c, B in zip(a, self.basis):
            A += c * B
        return A

    def coords_from_skew(self, A: Array) -> Array:
        # the E_ij - E_ji basis is Frobenius-orthogonal with norm^2 = 2
        return np.array([np.tensordot(A, B) / 2.0 for B in self.basis])

    def reference(self, x: Array) -> Array:
        if self._reference is not None:
            return np.asarray(self._reference(x), dtype=float)
        return reference_frame(self.manifold, x)

    def reference_derivative(self, x: Array, cfg: FDConfig = DEFAULT_FD) -> Array:
        if self._reference_derivative is not None:
            return np.asarray(self._reference_derivative(x), dtype=float)
        return central_diff(self.reference, x, cfg.step_h)

    # -- frames -----------------------------------------------------------

    def decode(self, q: Array) -> Frame:
        x, a = self.split(q)
        E = self.reference(x) @ scipy.linalg.expm(self.skew_from_coords(a))
        return Frame(x, E)

    def encode(self, u: Frame, tol: float = 1e-8) -> Array:
        """Chart coordinates of a frame; errors if u is not reachable.

        Requires u orthonormal (up to ``tol``) and the rotation within the
        span of the chart's skew directions, with principal log below the
        injectivity cutoff.
        """
        R = np.linalg.solve(self.reference(u.base), u.columns)
        if np.max(np.abs(R.T @ R - np.eye(self.manifold.dim))) > 1e-6:
            raise ValueError("frame is not orthonormal for this chart")
        A = scipy.linalg.logm(R)
        if np.max(np.abs(A.imag)) > tol:
            raise ValueError("matrix log did not converge to a real rotation")
        A = A.real
        A = 0.5 * (A - A.T)
        a = self.coords_from_skew(A)
        if np.max(np.abs(self.skew_from_coords(a) - A)) > tol:
            raise ValueError("frame rotation leaves the chart's skew directions")
        if np.max(np.abs(scipy.linalg.expm(A) - R)) > 1e-6:
            raise ValueError("matrix log inconsistent with the frame rotation")
        return self.join(u.base, a)

    # -- tangent conversions ----------------------------------------------

    def chart_to_tangent(self, q: Array, qdot: Array, cfg: FDConfig = DEFAULT_FD) -> FrameTangent:
        x, a = self.split(q)
        xdot, adot = self.split(qdot)
        A = self.skew_from_coords(a)
        expA = scipy.linalg.expm(A)
        dref = self.reference_derivative(x, cfg)
        Edot = np.einsum("kij,k->ij", dref, xdot) @ expA
        Adot = self.skew_from_coords(adot)
        Edot += self.reference(x) @ scipy.linalg.expm_frechet(A, Adot, compute_expm=False)
        return FrameTangent(self.decode(q), xdot, Edot)

    def tangent_to_chart(self, t: FrameTangent, cfg: FDConfig = DEFAULT_FD,
                         tol: float = 1e-6) -> Array:
        """Chart rates of a frame tangent; errors if not tangent to the chart."""
        u = t.at
        q = self.encode(u)
        x, a = self.split(q)
        A = self.skew_from_coords(a)
        expA = scipy.linalg.expm(A)
        dref = self.reference_derivative(x, cfg)
        rhs = t.frame_rate - np.einsum("kij,k->ij", dref, t.base_rate) @ expA
        ref = self.reference(x)
        cols = [
            (ref @ scipy.linalg.expm_frechet(A, B, compute_expm=False)).ravel()
            for B in self.basis
        ]
        Mcols = np.column_stack(cols) if cols else np.zeros((rhs.size, 0))
        adot, *_ = np.linalg.lstsq(Mcols, rhs.ravel(), rcond=None)
        resid = np.linalg.norm(Mcols @ adot - rhs.ravel())
        scale = 1.0 + np.linalg.norm(t.base_rate) + np.linalg.norm(t.frame_rate)
        if resid > tol * scale:
            raise ValueError(f"tangent is not tangent to chart {self.name} (residual {resid:.3g})")
        return self.join(t.base_rate, adot)


class LMChart:
    """Global chart (x, vec(E)) on the full frame bundle L(M)."""

    def __init__(self, M: ChartManifold, name: str = "L(M)"):
        self.manifold = M
        self.name = name
        self.dim = M.dim + M.dim * M.dim

    def split(self, q: Array) -> tuple[Array, Array]:
        n = self.manifold.dim
        q = np.asarray(q, dtype=float)
        return q[:n], q[n:].reshape(n, n)

    def join(self, x: Array, E: Array) -> Array:
        return np.concatenate([np.asarray(x, dtype=float), np.asarray(E, dtype=float).ravel()])

    def decode(self, q: Array) -> Frame:
        x, E = self.split(q)
        return Frame(x, E)

    def encode(self, u: Frame) -> Array:
        return self.join(u.base, u.columns)

    def chart_to_tangent(self, q: Array, qdot: Array, cfg: FDConfig = DEFAULT_FD) -> FrameTangent:
        xdot, Edot = self.split(qdot)
        return FrameTangent(self.decode(q), xdot, Edot)

    def tangent_to_chart(self, t: FrameTangent, cfg: FDConfig = DEFAULT_FD) -> Array:
        return self.join(t.base_rate, t.frame_rate)


def om_chart(M: ChartManifold, name: str = "O(M)") -> FrameChart:
    return FrameChart(M, basis=skew_basis(M.dim), name=name)


def om_chart_encode(u: Frame, chart: FrameChart) -> Array:
    """Skew coordinates of an orthonormal frame in the chart."""
    q = chart.encode(u)
    _, a = chart.split(q)
    return a


def om_chart_decode(a: Array, x: Array, chart: FrameChart) -> Frame:
    return chart.decode(chart.join(x, a))


# ---------------------------------------------------------------------------
# induced metric on the total space and the Levi-Civita oracle
# ---------------------------------------------------------------------------

def induced_metric_on_chart(chart, q: Array, cfg: FDConfig = DEFAULT_FD) -> Array:
    """Mok metric expressed in the chart coordinates of the total space."""
    q = np.asarray(q, dtype=float)
    m = chart.dim
    tangents = []
    for k in range(m):
        qdot = np.zeros(m)
        qdot[k] = 1.0
        tangents.append(chart.chart_to_tangent(q, qdot, cfg))
    M = chart.manifold
    G = np.zeros((m, m))
    for i in range(m):
        for j in range(i, m):
            G[i, j] = G[j, i] = mok_metric(M, tangents[i], tangents[j], cfg)
    return G


def total_space_manifold(chart, cfg: FDConfig = DEFAULT_FD) -> ChartManifold:
    """The frame-bundle total space as a ChartManifold with the induced metric."""
    base = chart.manifold

    def predicate(q: Array) -> bool:
        x = np.asarray(q[: base.dim], dtype=float)
        if not base.contains(x):
            return False
        if isinstance(chart, LMChart):
            _, E = chart.split(q)
            return abs(np.linalg.det(E)) > 1e-8
        _, a = chart.split(q)
        return float(np.linalg.norm(a)) < 2.0

    return ChartManifold(
        dim=chart.dim,
        metric_field=lambda q: induced_metric_on_chart(chart, q, cfg),
        domain_predicate=predicate,
        name=f"total[{chart.name}]",
    )


def lc_total_space_oracle(
    chart,
    A_field: Callable[[Array], Array],
    B_field: Callable[[Array], Array],
    q: Array,
    cfg: FDConfig = DEFAULT_FD,
) -> FrameTangent:
    """Levi-Civita covariant derivative nabla_A B on the total space.

    ``A_field`` and ``B_field`` give chart-coordinate rates as functions of
    the chart point.  Everything is brute force: the induced metric is
    differenced at step_h2 because its entries already contain one level of
    derived quantities.
    """
    total = total_space_manifold(chart, cfg)
    cfg_total = FDConfig(
        step_h=cfg.step_h2, step_h2=cfg.step_h2,
        tol_exact=cfg.tol_exact, tol_fd1=cfg.tol_fd1, tol_fd2=cfg.tol_fd2,
    )
    out = covariant_derivative(
        total, VectorField(eval=A_field), VectorField(eval=B_field), q, cfg_total
    )
    return chart.chart_to_tangent(q, out.components, cfg)


def fd_bracket_on_chart(
    chart,
    A_field: Callable[[Array], Array],
    B_field: Callable[[Array], Array],
    q: Array,
    cfg: FDConfig = DEFAULT_FD,
) -> FrameTangent:
    """Finite-difference Lie bracket [A, B] of two total-space fields."""
    out = lie_bracket(
        VectorField(eval=A_field), VectorField(eval=B_field), q, cfg, step=cfg.step_h2
    )
    return chart.chart_to_tangent(q, out.components, cfg)


# ---------------------------------------------------------------------------
# total-space realizations of the structural vector fields
# ---------------------------------------------------------------------------

def horizontal_field_on_chart(chart, X: VectorField, cfg: FDConfig = DEFAULT_FD):
    """Chart-coordinate field q -> rates of the horizontal lift of X."""
    M = chart.manifold

    def field(q: Array) -> Array:
        u = chart.decode(q)
        t = horizontal_lift_frame(M, TangentVector(u.base, X.eval(u.base)), u, cfg)
        return chart.tangent_to_chart(t, cfg)

    return field


def vertical_field_on_chart(chart, P: EndomorphismField, cfg: FDConfig = DEFAULT_FD):
    """Chart-coordinate field of the fundamental vertical field of P."""

    def field(q: Array) -> Array:
        u = chart.decode(q)
        t = fundamental_vertical(P.eval(u.base), u)
        return chart.tangent_to_chart(t, cfg)

    return field


# ---------------------------------------------------------------------------
# closed-form Levi-Civita connection and bracket identities
# ---------------------------------------------------------------------------

def endo_covariant_derivative(
    M: ChartManifold, Q: EndomorphismField, x: Array, p: Array,
    cfg: FDConfig = DEFAULT_FD,
) -> Array:
    """(nabla_x Q) at p as a matrix: directional derivative plus [Gamma_x, Q]."""
    dQ = directional_diff(Q.eval, p, x, cfg.step_h)
    gamma = christoffel(M, p, cfg)
    gx = christoffel_contract(gamma, x)
    Qp = np.asarray(Q.eval(p), dtype=float)
    return dQ + gx @ Qp - Qp @ gx


def curvature_endo(M: ChartManifold, p: Array, x: Array, y: Array,
                   cfg: FDConfig = DEFAULT_FD) -> Array:
    """R(x, y) as an endomorphism value at p."""
    R = curvature_tensor(M, p, cfg)
    return np.einsum("ijkl,i,j->lk", R, x, y)


def curvature_R_P_endo(M: ChartManifold, p: Array, P_value: Array,
                       onb: Sequence[TangentVector],
                       cfg: FDConfig = DEFAULT_FD) -> Array:
    """R_P = sum_i R(e_i, P e_i) as an endomorphism value at p."""
    R = curvature_tensor(M, p, cfg)
    out = np.zeros((M.dim, M.dim))
    for e in onb:
        out += np.einsum("ijkl,i,j->lk", R, e.components, P_value @ e.components)
    return out


def lc_connection_formula(
    M: ChartManifold,
    bundle: str,
    case: str,
    inputs: tuple,
    u: Frame,
    cfg: FDConfig = DEFAULT_FD,
    variant: str = "resolved",
) -> FrameTangent:
    """Closed-form right-hand sides for the Mok Levi-Civita connection.

    Cases (first argument differentiates the second):
      hh: nabla_{X^h} Y^h   = (nabla_X Y)^h - 1/2 R(X,Y)*
      hv: nabla_{X^h} Q*    = 1/2 R_Q(X)^h + (nabla_X Q)*
      vh: nabla_{P*}  Y^h   = 1/2 R_P(Y)^h
      vv: nabla_{P*}  Q*    = (Q o P)*  on L(M),  -1/2 [P,Q]*  on O(M)

    ``variant="literal"`` swaps the (nabla Q)* term from the hv to the vh
    case, the reading in which the hv/vh display lines are usually typeset;
    the total-space oracle adjudicates (the audit suite asserts "resolved").
    """
    p = u.base
    onb = orthonormal_basis(M, p)
    if case == "hh":
        X, Y = inputs
        nab = covariant_derivative(M, X, Y, p, cfg)
        Rxy = curvature_endo(M, p, X.eval(p), Y.eval(p), cfg)
        return horizontal_lift_frame(M, nab, u, cfg) + (-0.5) * fundamental_vertical(Rxy, u)
    if case == "hv":
        X, Q = inputs
        x = np.asarray(X.eval(p), dtype=float)
        RQ = curvature_R_P_endo(M, p, np.asarray(Q.eval(p), dtype=float), onb, cfg)
        out = 0.5 * horizontal_lift_frame(M, TangentVector(p, RQ @ x), u, cfg)
        if variant == "resolved":
            out = out + fundamental_vertical(endo_covariant_derivative(M, Q, x, p, cfg), u)
        return out
    if case == "vh":
        P, Y = inputs
        y = np.asarray(Y.eval(p), dtype=float)
        RP = curvature_R_P_endo(M, p, np.asarray(P.eval(p), dtype=float), onb, cfg)
        out = 0.5 * horizontal_lift_frame(M, TangentVector(p, RP @ y), u, cfg)
        if variant == "literal":
            out = out + fundamental_vertical(endo_covariant_derivative(M, P, y, p, cfg), u)
        return out
    if case == "vv":
        P, Q = inputs
        Pu = np.asarray(P.eval(p), dtype=float)
        Qu = np.asarray(Q.eval(p), dtype=float)
        if bundle == "L":
            return fundamental_vertical(Qu @ Pu, u)
        return fundamental_vertical(-0.5 * (Pu @ Qu - Qu @ Pu), u)
    raise ValueError(f"unknown case {case!r}")


def bracket_rhs(
    M: ChartManifold,
    case: str,
    inputs: tuple,
    u: Frame,
    cfg: FDConfig = DEFAULT_FD,
    variant: str = "resolved",
) -> FrameTangent:
    """Closed-form bracket identities on the frame bundle.

      hh: [X^h, Y^h] = [X,Y]^h - R(X,Y)*
      hv: [X^h, Q*]  = (nabla_X Q)*        ("literal" flips the sign)
      vv: [P*, Q*]   = -[P,Q]*
    """
    p = u.base
    if case == "hh":
        X, Y = inputs
        br = lie_bracket(X, Y, p, cfg)
        Rxy = curvature_endo(M, p, X.eval(p), Y.eval(p), cfg)
        return horizontal_lift_frame(M, br, u, cfg) + (-1.0) * fundamental_vertical(Rxy, u)
    if case == "hv":
        X, Q = inputs
        nq = endo_covariant_derivative(M, Q, np.asarray(X.eval(p), dtype=float), p, cfg)
        sign = 1.0 if variant == "resolved" else -1.0
        return sign * fundamental_vertical(nq, u)
    if case == "vv":
        P, Q = inputs
        Pu = np.asarray(P.eval(p), dtype=float)
        Qu = np.asarray(Q.eval(p), dtype=float)
        return fundamental_vertical(-(Pu @ Qu - Qu @ Pu), u)
    raise ValueError(f"unknown case {case!r}")


def _case_fields(chart, case: str, inputs: tuple, cfg: FDConfig):
    if case in ("hh",):
        A = horizontal_field_on_chart(chart, inputs[0], cfg)
        B = horizontal_field_on_chart(chart, inputs[1], cfg)
    elif case == "hv":
        A = horizontal_field_on_chart(chart, inputs[0], cfg)
        B = vertical_field_on_chart(chart, inputs[1], cfg)
    elif case == "vh":
        A = vertical_field_on_chart(chart, inputs[0], cfg)
        B = horizontal_field_on_chart(chart, inputs[1], cfg)
    elif case == "vv":
        A = vertical_field_on_chart(chart, inputs[0], cfg)
        B = vertical_field_on_chart(chart, inputs[1], cfg)
    else:
        raise ValueError(f"unknown case {case!r}")
    return A, B


def bracket_residual(
    M: ChartManifold,
    chart,
    case: str,
    inputs: tuple,
    u: Frame,
    cfg: FDConfig = DEFAULT_FD,
    variant: str = "resolved",
) -> float:
    """Mok norm of (finite-difference bracket) - (closed-form right side)."""
    A, B = _case_fields(chart, case, inputs, cfg)
    q = chart.encode(u)
    fd = fd_bracket_on_chart(chart, A, B, q, cfg)
    rhs = bracket_rhs(M, case, inputs, u, cfg, variant=variant)
    return mok_norm(M, fd - rhs, cfg)


def connection_residual(
    M: ChartManifold,
    chart,
    bundle: str,
    case: str,
    inputs: tuple,
    u: Frame,
    cfg: FDConfig = DEFAULT_FD,
    variant: str = "resolved",
) -> float:
    """Mok norm of (total-space oracle) - (closed-form connection formula)."""
    A, B = _case_fields(chart, case, inputs, cfg)
    q = chart.encode(u)
    oracle = lc_total_space_oracle(chart, A, B, q, cfg)
    rhs = lc_connection_formula(M, bundle, case, inputs, u, cfg, variant=variant)
    return mok_norm(M, oracle - rhs, cfg)


def connection_audit(
    M: ChartManifold,
    bundle: str,
    u: Frame,
    fields: dict,
    cfg: FDConfig = DEFAULT_FD,
) -> list[dict]:
    """Audit table comparing the connection formulas against the oracle.

    ``fields`` supplies X, Y (vector fields) and P, Q (endomorphism fields,
    g-skew for O(M)).  Rows for the "literal" hv/vh readings are included
    as unasserted diagnostics.
    """
    chart = LMChart(M) if bundle == "L" else om_chart(M)
    X, Y, P, Q = fields["X"], fields["Y"], fields["P"], fields["Q"]
    cases = [("hh", (X, Y)), ("hv", (X, Q)), ("vh", (P, Y)), ("vv", (P, Q))]
    rows = []
    for case, inputs in cases:
        for variant in ("resolved", "literal"):
            if variant == "literal" and case not in ("hv", "vh"):
                continue
            res = connection_residual(M, chart, bundle, case, inputs, u, cfg, variant=variant)
            rows.append({
                "bundle": bundle,
                "case": case,
                "variant": variant,
                "residual": res,
                "asserted": variant == "resolved",
            })
    return rows
