"""Numerical two-stage optimizer for locally available quantum correlations.

Stage 1 finds the local measurement basis whose induced joint outcome
distribution carries the least mutual information among the bases that leave
the state's correlation structure stationary; stage 2 maximizes the mutual
information of the complementary-basis distributions over the two free
phases.  The module is the ground-truth validator for the closed forms in
``closed_form``.

A note on stage 1: a fully unconstrained minimization over four independent
angles is degenerate -- misaligning the two measurement axes always drives
the induced mutual information to zero (e.g. measuring a singlet along z on
one side and x on the other yields the uniform distribution).  The
minimization that reproduces the relative-entropy-nearest classical state is
therefore taken over common measurement axes at which both the marginal term
and the correlation form are simultaneously stationary: the eigenvectors of
the symmetrized correlation tensor compatible with the local Bloch vector.
The subsequent phase maximization is a genuine unconstrained 2-D search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix4, bloch_from_density, partial_trace, xlog2

TWO_PI = 2.0 * np.pi
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class SearchConfig:
    """Grid-search parameters.

    grid: coarse points per angle (>= 16); rounds: minimum window-halving
    refinement rounds (>= 2); tol: target absolute accuracy of the optimum.
    """

    grid: int = 24
    rounds: int = 4
    tol: float = 1e-6

    def __post_init__(self):
        if self.grid < 16:
            raise ValueError("grid must be >= 16 points per angle")
        if self.rounds < 2:
            raise ValueError("rounds must be >= 2")
        if not (0 < self.tol < 1):
            raise ValueError("tol must be in (0, 1)")


@dataclass(frozen=True)
class LocalBasisAngles:
    """Measurement basis angles (theta in [0, pi], phi in [0, 2 pi)) per qubit."""

    theta1: float
    theta2: float
    phi1: float
    phi2: float

    def __post_init__(self):
        for th in (self.theta1, self.theta2):
            if not (-1e-12 <= th <= np.pi + 1e-12):
                raise ValueError(f"theta {th} outside [0, pi]")
        for ph in (self.phi1, self.phi2):
            if not (-1e-12 <= ph < TWO_PI + 1e-12):
                raise ValueError(f"phi {ph} outside [0, 2 pi)")


@dataclass(frozen=True)
class ComplementaryPhases:
    """Free phases of the complementary basis, one per qubit."""

    Phi1: float
    Phi2: float

    def __post_init__(self):
        for ph in (self.Phi1, self.Phi2):
            if not (-1e-12 <= ph < TWO_PI + 1e-12):
                raise ValueError(f"Phi {ph} outside [0, 2 pi)")


@dataclass(frozen=True)
class JointDistribution:
    """A 2x2 joint outcome distribution with its marginals."""

    p: np.ndarray
    pA: np.ndarray
    pB: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        if p.min() < -1e-10:
            raise ValueError(f"negative probability {p.min():.3e}")
        p = np.clip(p, 0.0, None)
        if abs(p.sum() - 1.0) > 1e-10:
            raise ValueError(f"distribution sums to {p.sum()!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "pA", p.sum(axis=1))
        object.__setattr__(self, "pB", p.sum(axis=0))


def basis_vectors(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal qubit basis |mu_0>, |mu_1> pointing along (theta, phi).

    |mu_0> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
    |mu_1> = e^{-i phi} sin(theta/2)|0> - cos(theta/2)|1>.

    The phase placement on |mu_1> makes the complementary-basis phase enter
    only through Psi = Phi - phi.
    """
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return (
        np.array([c, np.exp(1j * phi) * s]),
        np.array([np.exp(-1j * phi) * s, -c]),
    )


def induced_distribution(
    rho: DensityMatrix4, basis: LocalBasisAngles
) -> JointDistribution:
    """Outcome distribution p[i][j] = <mu_i nu_j| rho |mu_i nu_j>."""
    m = rho.matrix
    mus = basis_vectors(basis.theta1, basis.phi1)
    nus = basis_vectors(basis.theta2, basis.phi2)
    p = np.empty((2, 2))
    for i in range(2):
        for j in range(2):
            v = np.kron(mus[i], nus[j])
            p[i, j] = (v.conj() @ m @ v).real
    return JointDistribution(p=p, pA=p.sum(axis=1), pB=p.sum(axis=0))


def distribution_mutual_information(d: JointDistribution) -> float:
    """Mutual information of a joint distribution, bits."""
    return float(xlog2(d.p).sum() - xlog2(d.pA).sum() - xlog2(d.pB).sum())


# --- stage 1: candidate common axes and the classical minimum ---------------


def _axis_angles(d: np.ndarray) -> tuple[float, float]:
    """Spherical angles of a unit axis, with the d/-d ambiguity resolved
    toward the upper hemisphere."""
    d = np.asarray(d, dtype=float)
    d = d / np.linalg.norm(d)
    if d[2] < 0 or (abs(d[2]) < 1e-14 and (d[0] < 0 or (d[0] == 0 and d[1] < 0))):
        d = -d
    theta = float(np.arccos(np.clip(d[2], -1.0, 1.0)))
    phi = float(np.arctan2(d[1], d[0])) % TWO_PI
    if abs(theta) < 1e-14 or abs(theta - np.pi) < 1e-14:
        phi = 0.0
    return theta, phi


def candidate_axes(rho: DensityMatrix4, tol: float = 1e-9) -> list[np.ndarray]:
    """Common measurement axes at which both the marginal term and the
    correlation form d.T.d are stationary.

    These are the eigendirections of sym(T) = (T + T^t)/2, restricted (when
    the A-side Bloch vector is nonzero) to the direction along the Bloch
    vector -- admissible only if it is itself an eigendirection -- and the
    eigendirections orthogonal to it.  Degenerate eigenspaces are re-based so
    the Bloch vector's in-space component is one basis direction.
    """
    fb = bloch_from_density(rho)
    S = (fb.T + fb.T.T) / 2.0
    evals, vecs = np.linalg.eigh(S)
    a = fb.a
    na = np.linalg.norm(a)
    # group (nearly) degenerate eigenvalues so eigenspaces are handled whole
    groups: list[list[int]] = [[0]]
    for k in range(1, 3):
        if abs(evals[k] - evals[groups[-1][0]]) <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    axes: list[np.ndarray] = []
    if na <= tol:
        for grp in groups:
            axes.extend(vecs[:, k] for k in grp)
        return axes
    ahat = a / na
    for grp in groups:
        B = vecs[:, grp]  # orthonormal basis of the eigenspace, 3 x k
        comp = B @ (B.T @ ahat)
        nc = np.linalg.norm(comp)
        if nc > tol:
            u = comp / nc
            if nc > 1.0 - 1e-9:
                # Bloch vector lies in this eigenspace: it is stationary
                axes.append(u)
            # remaining in-space directions orthogonal to the Bloch component
            for k in grp:
                w = vecs[:, k] - (vecs[:, k] @ u) * u
                nw = np.linalg.norm(w)
                if nw > tol:
                    w = w / nw
                    if not any(abs(abs(w @ ax) - 1.0) < 1e-9 for ax in axes):
                        axes.append(w)
        else:
            axes.extend(vecs[:, k] for k in grp)
    return axes


@dataclass(frozen=True)
class MinimizeResult:
    value: float
    angles: LocalBasisAngles
    degenerate: bool


def minimize_classical(rho: DensityMatrix4, cfg: SearchConfig | None = None):
    """Minimum induced mutual information over admissible common bases.

    Returns (value_bits, MinimizeResult).  Ties within 1e-9 are broken by the
    lowest lexicographic (theta, phi) tuple and flagged as degenerate.
    """
    cfg = cfg or SearchConfig()
    entries = []
    for axis in candidate_axes(rho):
        theta, phi = _axis_angles(axis)
        basis = LocalBasisAngles(theta, theta, phi, phi)
        mi = distribution_mutual_information(induced_distribution(rho, basis))
        entries.append((mi, theta, phi, basis))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    best = entries[0]
    degenerate = sum(1 for e in entries if e[0] - best[0] < DEGENERACY_TOL) > 1
    return best[0], MinimizeResult(value=best[0], angles=best[3], degenerate=degenerate)


# --- stage 2: complementary-phase maximization ------------------------------


def _complementary_vectors(theta, phi, Phi):
    mu0, mu1 = basis_vectors(theta, phi)
    u_plus = (mu0 + np.exp(1j * Phi) * mu1) / np.sqrt(2)
    u_minus = (mu0 - np.exp(1j * Phi) * mu1) / np.sqrt(2)
    return u_plus, u_minus


def complementary_distribution(
    rho: DensityMatrix4, opt_basis: LocalBasisAngles, phases: ComplementaryPhases
) -> JointDistribution:
    """Outcome distribution of measuring both qubits in the complementary
    basis u_+/- = (|mu_0> +/- e^{i Phi} |mu_1>)/sqrt(2)."""
    m = rho.matrix
    us = _complementary_vectors(opt_basis.theta1, opt_basis.phi1, phases.Phi1)
    vs = _complementary_vectors(opt_basis.theta2, opt_basis.phi2, phases.Phi2)
    p = np.empty((2, 2))
    for i in range(2):
        for j in range(2):
            w = np.kron(us[i], vs[j])
            p[i, j] = (w.conj() @ m @ w).real
    return JointDistribution(p=p, pA=p.sum(axis=1), pB=p.sum(axis=0))


def _best_cell(values: np.ndarray, xs: np.ndarray, ys: np.ndarray):
    """Entries of a value grid sorted by (value desc, x asc, y asc)."""
    flat = [
        (values[i, j], xs[i], ys[j])
        for i in range(len(xs))
        for j in range(len(ys))
    ]
    flat.sort(key=lambda e: (-e[0], e[1], e[2]))
    return flat


def _refine_max_2d(fun_grid, cfg: SearchConfig):
    """Coarse grid over [0, 2 pi)^2 plus successive window-halving refinement
    around the best cells.

    fun_grid(xs, ys) evaluates the objective on the product grid and returns
    a (len(xs), len(ys)) array.  Deterministic: ties go to the lowest (x, y).
    """
    n = 2 * cfg.grid
    xs = np.linspace(0.0, TWO_PI, n, endpoint=False)
    coarse = _best_cell(fun_grid(xs, xs), xs, xs)
    h0 = TWO_PI / n
    # halve until the window supports the requested tolerance
    rounds = max(cfg.rounds, int(np.ceil(np.log2(h0 / np.sqrt(cfg.tol)))) + 2)
    best_overall = None
    for _, cx, cy in coarse[:3]:  # hedge against multimodality
        h = h0
        bv, bx, by = None, cx, cy
        for _ in range(rounds):
            gx = bx + np.linspace(-h, h, 5)
            gy = by + np.linspace(-h, h, 5)
            bv, bx, by = _best_cell(fun_grid(gx, gy), gx, gy)[0]
            h /= 2.0
        cand = (bv, bx % TWO_PI, by % TWO_PI)
        if best_overall is None or (-cand[0], cand[1], cand[2]) < (
            -best_overall[0],
            best_overall[1],
            best_overall[2],
        ):
            best_overall = cand
    degenerate = (
        sum(1 for e in coarse if coarse[0][0] - e[0] < DEGENERACY_TOL) > 1
    )
    return best_overall[0], (best_overall[1], best_overall[2]), degenerate


def _mi_from_grid(p: np.ndarray) -> np.ndarray:
    """Mutual information of a (..., 2, 2) block of joint distributions."""
    p = np.clip(p, 0.0, None)
    pa = p.sum(axis=-1)
    pb = p.sum(axis=-2)
    return (
        xlog2(p).sum(axis=(-2, -1)) - xlog2(pa).sum(axis=-1) - xlog2(pb).sum(axis=-1)
    )


def maximize_complementary(
    rho: DensityMatrix4, opt_basis: LocalBasisAngles, cfg: SearchConfig | None = None
):
    """Maximum complementary-basis mutual information over (Phi1, Phi2).

    Returns (value_bits, ComplementaryPhases, degenerate_flag).
    """
    cfg = cfg or SearchConfig()
    m4 = rho.matrix.reshape(2, 2, 2, 2)

    def comp_stack(theta, phi, phis):
        mu0, mu1 = basis_vectors(theta, phi)
        e = np.exp(1j * phis)[:, None]
        return np.stack(
            [(mu0 + e * mu1) / np.sqrt(2), (mu0 - e * mu1) / np.sqrt(2)], axis=1
        )  # (n, outcome, component)

    def objective_grid(xs, ys):
        U = comp_stack(opt_basis.theta1, opt_basis.phi1, np.asarray(xs) % TWO_PI)
        V = comp_stack(opt_basis.theta2, opt_basis.phi2, np.asarray(ys) % TWO_PI)
        # p[x, y, i, j] = <U_xi V_yj| rho |U_xi V_yj>
        t = np.einsum("xia,acbd,xib->xicd", U.conj(), m4, U)
        p = np.einsum("yjc,xicd,yjd->xyij", V.conj(), t, V).real
        return _mi_from_grid(p)

    value, (p1, p2), degenerate = _refine_max_2d(objective_grid, cfg)
    return value, ComplementaryPhases(p1, p2), degenerate


# --- composition ------------------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    """Result of the full two-stage numerical pipeline."""

    classical: float
    classical_angles: LocalBasisAngles
    classical_degenerate: bool
    laqc: float
    phases: ComplementaryPhases
    laqc_degenerate: bool


def laqc_numeric(rho: DensityMatrix4, cfg: SearchConfig | None = None) -> OracleReport:
    """Run stage 1 then stage 2 and bundle the results."""
    cfg = cfg or SearchConfig()
    c_val, c_res = minimize_classical(rho, cfg)
    l_val, phases, l_deg = maximize_complementary(rho, c_res.angles, cfg)
    return OracleReport(
        classical=c_val,
        classical_angles=c_res.angles,
        classical_degenerate=c_res.degenerate,
        laqc=l_val,
        phases=phases,
        laqc_degenerate=l_deg,
    )


# --- independent discord cross-check ----------------------------------------


def _entropy2(m: np.ndarray) -> float:
    evals = np.clip(np.linalg.eigvalsh(m), 0.0, None)
    return float(-xlog2(evals).sum())


def discord_numeric(rho: DensityMatrix4, cfg: SearchConfig | None = None) -> float:
    """Quantum discord with measurement on A by direct minimization of the
    average conditional entropy over projective measurement directions."""
    cfg = cfg or SearchConfig()
    m4 = rho.matrix.reshape(2, 2, 2, 2)
    s_a = _entropy2(partial_trace(rho, "A"))
    s_b = _entropy2(partial_trace(rho, "B"))
    s_ab = _entropy2(rho.matrix)
    info = s_a + s_b - s_ab

    def objective_grid(xs, ys):
        # xs spans [0, 2 pi); theta = x/2 covers the sphere
        theta = np.asarray(xs)[:, None] / 2.0
        phi = np.asarray(ys)[None, :]
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        ph = np.exp(1j * phi)
        U = np.empty((len(xs), len(ys), 2, 2), dtype=complex)
        U[..., 0, 0] = c
        U[..., 0, 1] = ph * s
        U[..., 1, 0] = s / ph
        U[..., 1, 1] = -c
        # unnormalized post-measurement B states, one per outcome k
        rb = np.einsum("xyka,acbd,xykb->xykcd", U.conj(), m4, U)
        pk = np.einsum("xykcc->xyk", rb).real
        det = (rb[..., 0, 0] * rb[..., 1, 1] - rb[..., 0, 1] * rb[..., 1, 0]).real
        gap = np.sqrt(np.clip(pk**2 - 4.0 * det, 0.0, None))
        lam = np.stack([(pk + gap) / 2.0, (pk - gap) / 2.0], axis=-1)
        mu = np.divide(
            lam, pk[..., None], out=np.zeros_like(lam), where=pk[..., None] > 1e-14
        )
        cond = (pk * (-xlog2(np.clip(mu, 0.0, 1.0))).sum(axis=-1)).sum(axis=-1)
        return s_b - cond

    c_max, _, _ = _refine_max_2d(objective_grid, cfg)
    return float(info - c_max)
