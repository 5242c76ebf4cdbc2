"""Closed-form correlation measures for canonical X states.

Implements the branch functions g1, g2, g+/- whose minimum and maximum over
the admissible local bases give the classical correlations and the locally
available quantum correlations, plus mutual information, quantum discord via
the minimum-conditional-entropy route, and concurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import (
    DensityMatrix4,
    SymmetryClass,
    XStateParams,
    partial_trace,
    von_neumann_entropy,
    x_params_from_density,
    x_state_eigenvalues,
    xlog2,
)

SIGMA_Y2 = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)  # sigma_y x sigma_y


def binary_entropy(p: float) -> float:
    """h2(p) = -p log2 p - (1-p) log2 (1-p) in bits."""
    p = float(p)
    if p < -1e-12 or p > 1 + 1e-12:
        raise ValueError(f"probability {p} outside [0, 1]")
    p = min(max(p, 0.0), 1.0)
    return float(-xlog2([p, 1.0 - p]).sum())


def f_term(x: float) -> float:
    """f(x) = h2((1+x)/2) - 1; even, f(0) = 0, f(+/-1) = -1."""
    return binary_entropy((1.0 + x) / 2.0) - 1.0


def mutual_information_2x2(p: np.ndarray) -> float:
    """Mutual information in bits of a joint 2x2 probability table."""
    p = np.asarray(p, dtype=float)
    if p.min() < -1e-12:
        raise ValueError("negative probability in joint distribution")
    p = np.clip(p, 0.0, None)
    pa = p.sum(axis=1)
    pb = p.sum(axis=0)
    return float(
        xlog2(p).sum() - xlog2(pa).sum() - xlog2(pb).sum()
    )


@dataclass(frozen=True)
class GValues:
    """The branch values g1, g2, g_plus, g_minus (bits).

    g_plus applies to symmetric (and Bell-diagonal) states, g_minus to
    anti-symmetric (and Bell-diagonal) ones; an inapplicable branch -- its
    joint distribution would have negative entries -- is None.
    """

    g1: float
    g2: float
    g_plus: float | None
    g_minus: float | None

    def as_dict(self):
        return {
            "g1": self.g1,
            "g2": self.g2,
            "g_plus": self.g_plus,
            "g_minus": self.g_minus,
        }


def g1(T1: float) -> float:
    """Correlation along sigma_x x sigma_x: 1 - h2((1+T1)/2)."""
    return 1.0 - binary_entropy((1.0 + T1) / 2.0)


def g2(T2: float) -> float:
    """Correlation along sigma_y x sigma_y: 1 - h2((1+T2)/2)."""
    return 1.0 - binary_entropy((1.0 + T2) / 2.0)


def _g_plus_distribution(x3: float, T3: float) -> np.ndarray:
    return np.array(
        [
            [(1 + T3 + 2 * x3) / 4, (1 - T3) / 4],
            [(1 - T3) / 4, (1 + T3 - 2 * x3) / 4],
        ]
    )


def g_plus(x3: float, T3: float) -> float:
    """Symmetric-branch correlation along sigma_z x sigma_z.

    Equal to the mutual information of the joint distribution
    {(1+T3+2 x3)/4, (1-T3)/4, (1-T3)/4, (1+T3-2 x3)/4}.
    """
    return mutual_information_2x2(_g_plus_distribution(x3, T3))


def g_minus(x3: float, T3: float) -> float:
    """Anti-symmetric-branch correlation, g_minus(x3, T3) = g_plus(x3, -T3)."""
    return g_plus(x3, -T3)


def g_values(p: XStateParams) -> GValues:
    def maybe(fn):
        try:
            return fn(p.x3, p.T3)
        except ValueError:
            return None

    return GValues(
        g1=g1(p.T1),
        g2=g2(p.T2),
        g_plus=maybe(g_plus),
        g_minus=maybe(g_minus),
    )


def _g_pm(p: XStateParams) -> float:
    """The z-branch value appropriate to the symmetry class."""
    cls = p.symmetry_class
    if cls == SymmetryClass.ANTI_SYMMETRIC:
        return g_minus(p.x3, p.T3)
    # symmetric and Bell-diagonal coincide (g+ = g- when x3 = 0)
    return g_plus(p.x3, p.T3)


@dataclass(frozen=True)
class OptimalBasisBranch:
    """Which branch realises an extremum and the measurement angles that
    attain it.

    branch is one of "g_pm", "g1", "g2"; theta/phi are the common local
    measurement angles (phi is None when the branch leaves it free). tied is
    True when another branch attains the same value within tolerance.
    """

    branch: str
    theta: float
    phi: float | None
    tied: bool


_BRANCH_ANGLES = {
    "g_pm": (0.0, None),
    "g1": (np.pi / 2, 0.0),
    "g2": (np.pi / 2, np.pi / 2),
}
_BRANCH_ORDER = ("g_pm", "g1", "g2")


def _select_branch(values: dict, pick, tol: float = 1e-12) -> OptimalBasisBranch:
    target = pick(values.values())
    hits = [b for b in _BRANCH_ORDER if abs(values[b] - target) <= tol]
    branch = hits[0]
    theta, phi = _BRANCH_ANGLES[branch]
    return OptimalBasisBranch(branch=branch, theta=theta, phi=phi, tied=len(hits) > 1)


def _require_admissible(p: XStateParams, what: str):
    if p.symmetry_class == SymmetryClass.OTHER:
        raise ValueError(
            f"{what} closed form requires x3 = y3, x3 = -y3, or x3 = y3 = 0; "
            f"got x3={p.x3}, y3={p.y3}"
        )


def classical_correlations_x(p: XStateParams):
    """Classical correlations C = min(g1, g2, g_pm) with its optimal branch."""
    _require_admissible(p, "classical correlations")
    values = {"g_pm": _g_pm(p), "g1": g1(p.T1), "g2": g2(p.T2)}
    branch = _select_branch(values, min)
    return values[branch.branch], branch


def laqc_x(p: XStateParams):
    """Locally available quantum correlations L = max(g1, g2, g_pm)."""
    _require_admissible(p, "LAQC")
    values = {"g_pm": _g_pm(p), "g1": g1(p.T1), "g2": g2(p.T2)}
    branch = _select_branch(values, max)
    return values[branch.branch], branch


# --- entanglement -----------------------------------------------------------


def concurrence_x(state) -> float:
    """Concurrence of a canonical X state.

    C = max{0, 2(|rho14| - sqrt(rho22 rho33)), 2(|rho23| - sqrt(rho11 rho44))}
    with rho14 = (T1 - T2)/4 and rho23 = (T1 + T2)/4.

    Accepts XStateParams or a DensityMatrix4; matrix entries are used
    directly when available (the Bloch reconstruction of the diagonal can
    turn an exact zero into a rounding residue whose square root dominates
    the error budget).
    """
    if isinstance(state, DensityMatrix4):
        m = state.matrix
        d = np.clip(np.diag(m).real, 0.0, None)
        rho14 = abs(m[0, 3])
        rho23 = abs(m[1, 2])
    else:
        p = state
        d = p.diagonal()
        if d.min() < -1e-12:
            raise ValueError("parameters do not define a state (negative diagonal)")
        d = np.clip(d, 0.0, None)
        # reassembling the diagonal from Bloch parameters leaves ~eps residue
        # where an entry is exactly zero; sqrt would amplify it to ~1e-8
        d[d < 1e-15] = 0.0
        rho14 = abs(p.T1 - p.T2) / 4.0
        rho23 = abs(p.T1 + p.T2) / 4.0
    c1 = 2.0 * (rho14 - np.sqrt(d[1] * d[2]))
    c2 = 2.0 * (rho23 - np.sqrt(d[0] * d[3]))
    return float(max(0.0, c1, c2))


def concurrence_wootters(rho: DensityMatrix4) -> float:
    """General two-qubit concurrence via the spin-flipped product spectrum."""
    m = rho.matrix
    rho_tilde = m @ SIGMA_Y2 @ m.conj() @ SIGMA_Y2
    evals = np.linalg.eigvals(rho_tilde)
    evals = np.sqrt(np.abs(np.sort(evals.real)[::-1]))
    return float(max(0.0, evals[0] - evals[1] - evals[2] - evals[3]))


# --- mutual information and discord -----------------------------------------


def mutual_information(rho: DensityMatrix4) -> float:
    """Quantum mutual information I = S(A) + S(B) - S(AB), bits."""
    return (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )


def mutual_information_x(p: XStateParams) -> float:
    """Mutual information from X-state parameters:
    2 + f(x3) + f(y3) + sum lambda log2 lambda."""
    lams = x_state_eigenvalues(p)
    if lams.min() < -1e-10:
        raise ValueError("parameters do not define a state (negative eigenvalue)")
    return float(2.0 + f_term(p.x3) + f_term(p.y3) + xlog2(np.clip(lams, 0, None)).sum())


@dataclass(frozen=True)
class DiscordInternals:
    """Intermediate quantities of the discord computation."""

    f_x3: float
    f_y3: float
    lambdas: np.ndarray
    S1: float
    S2: float
    S3: float
    C_D: float
    I: float
    discord: float


def quantum_discord_x(p: XStateParams) -> DiscordInternals:
    """Quantum discord of an X state with |x3| = |y3| via measurement on A.

    The post-measurement conditional entropy is minimised over three
    candidate projective measurements, giving
    C_D = 1 + f(x3) - min{S1, S2, S3} and D = I - C_D.
    """
    _require_admissible(p, "quantum discord")
    diag = np.clip(p.diagonal(), 0.0, None)
    # S1: measurement along z. -sum_i rho_ii log2 [2 rho_ii / (1 - (-1)^i y3)]
    denoms = np.array(
        [1.0 + p.y3, 1.0 - p.y3, 1.0 + p.y3, 1.0 - p.y3]
    )
    s1 = 0.0
    for rho_ii, den in zip(diag, denoms):
        if rho_ii > 0.0:
            s1 -= rho_ii * np.log2(2.0 * rho_ii / den)
    s2 = 1.0 + f_term(np.sqrt(p.x3**2 + p.T1**2))
    s3 = 1.0 + f_term(np.sqrt(p.x3**2 + p.T2**2))
    info = mutual_information_x(p)
    c_d = 1.0 + f_term(p.x3) - min(s1, s2, s3)
    return DiscordInternals(
        f_x3=f_term(p.x3),
        f_y3=f_term(p.y3),
        lambdas=x_state_eigenvalues(p),
        S1=float(s1),
        S2=float(s2),
        S3=float(s3),
        C_D=float(c_d),
        I=float(info),
        discord=float(info - c_d),
    )


def discord_collapsed_diagnostic(p: XStateParams) -> float:
    """Collapsed discord expression valid when min{S} = S2 = S3.

    D = 2 + f(x3) + f(sqrt(x3^2 + T2^2)) + sum lambda log2 lambda.
    Diagnostic only; quantum_discord_x is authoritative.
    """
    lams = np.clip(x_state_eigenvalues(p), 0.0, None)
    return float(
        2.0
        + f_term(p.x3)
        + f_term(np.sqrt(p.x3**2 + p.T2**2))
        + xlog2(lams).sum()
    )


# --- top-level report -------------------------------------------------------


@dataclass(frozen=True)
class CorrelationReport:
    """All correlation measures of a single state, with branch attribution."""

    params: XStateParams
    symmetry_class: SymmetryClass
    g: GValues
    classical_correlations: float
    classical_branch: OptimalBasisBranch
    laqc: float
    laqc_branch: OptimalBasisBranch
    mutual_information: float
    discord: float
    concurrence: float
    method: str = "closed-form"


def full_report(rho_or_params) -> CorrelationReport:
    """Compute every measure for an X state given as a density matrix or as
    canonical parameters."""
    if isinstance(rho_or_params, XStateParams):
        p = rho_or_params
        conc_source = p
    else:
        p = x_params_from_density(rho_or_params)
        conc_source = rho_or_params
    c_val, c_branch = classical_correlations_x(p)
    l_val, l_branch = laqc_x(p)
    disc = quantum_discord_x(p)
    return CorrelationReport(
        params=p,
        symmetry_class=p.symmetry_class,
        g=g_values(p),
        classical_correlations=c_val,
        classical_branch=c_branch,
        laqc=l_val,
        laqc_branch=l_branch,
        mutual_information=disc.I,
        discord=disc.discord,
        concurrence=concurrence_x(conc_source),
        method="closed-form",
    )
