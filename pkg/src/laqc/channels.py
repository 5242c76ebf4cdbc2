"""Kraus-operator decoherence channels acting independently on each qubit,
plus the closed-form parameter map for Werner states under amplitude damping
and the derived comparison quantities S(z, p) and S'(z, p).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closed_form import g1, g_plus, laqc_x, quantum_discord_x
from .states import DensityMatrix4, XStateParams

COMPLETENESS_TOL = 1e-12


@dataclass(frozen=True)
class KrausSet:
    """A set of 2x2 Kraus operators with the completeness relation checked."""

    operators: tuple
    label: str = "custom"

    def __post_init__(self):
        ops = tuple(np.asarray(e, dtype=complex) for e in self.operators)
        if not ops:
            raise ValueError("empty Kraus set")
        acc = np.zeros((2, 2), dtype=complex)
        for e in ops:
            if e.shape != (2, 2):
                raise ValueError(f"Kraus operator has shape {e.shape}, expected 2x2")
            acc += e.conj().T @ e
        if np.max(np.abs(acc - np.eye(2))) > COMPLETENESS_TOL:
            raise ValueError(
                f"incomplete Kraus set: max |sum E^dag E - I| = "
                f"{np.max(np.abs(acc - np.eye(2))):.3e}"
            )
        for e in ops:
            e.flags.writeable = False
        object.__setattr__(self, "operators", ops)


def _check_p(p: float):
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"channel parameter {p} outside [0, 1]")


def identity_kraus() -> KrausSet:
    return KrausSet((np.eye(2),), label="identity")


def amplitude_damping_kraus(p: float) -> KrausSet:
    """E0 = diag(1, sqrt(1-p)), E1 = [[0, sqrt(p)], [0, 0]]."""
    _check_p(p)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]])
    e1 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]])
    return KrausSet((e0, e1), label=f"amplitude-damping({p})")


def depolarizing_kraus(p: float) -> KrausSet:
    """Standard single-qubit depolarizing channel:
    {sqrt(1-3p/4) I, sqrt(p)/2 sigma_x, sqrt(p)/2 sigma_y, sqrt(p)/2 sigma_z}."""
    _check_p(p)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    ops = (
        np.sqrt(1.0 - 3.0 * p / 4.0) * np.eye(2),
        np.sqrt(p) / 2.0 * sx,
        np.sqrt(p) / 2.0 * sy,
        np.sqrt(p) / 2.0 * sz,
    )
    return KrausSet(ops, label=f"depolarizing({p})")


def phase_damping_kraus(p: float) -> KrausSet:
    """E0 = diag(1, sqrt(1-p)), E1 = diag(0, sqrt(p)): off-diagonals scale
    by sqrt(1-p), populations untouched."""
    _check_p(p)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]])
    e1 = np.array([[0.0, 0.0], [0.0, np.sqrt(p)]])
    return KrausSet((e0, e1), label=f"phase-damping({p})")


def apply_channel(rho: DensityMatrix4, kA: KrausSet, kB: KrausSet) -> DensityMatrix4:
    """rho' = sum_ij (E_i^A x E_j^B) rho (E_i^A x E_j^B)^dag."""
    m = rho.matrix
    out = np.zeros((4, 4), dtype=complex)
    for ea in kA.operators:
        for eb in kB.operators:
            k = np.kron(ea, eb)
            out += k @ m @ k.conj().T
    # symmetrize away round-off so the validated constructor accepts it
    out = (out + out.conj().T) / 2.0
    return DensityMatrix4(out)


def werner_ad_closed_form(z: float, p: float) -> XStateParams:
    """Bloch parameters of a Werner state after amplitude damping on both
    qubits: x3 = y3 = p, T1 = T2 = -(1-p) z, T3 = p^2 - (1-p)^2 z."""
    _check_p(z)
    _check_p(p)
    return XStateParams(
        x3=p,
        y3=p,
        T1=-(1.0 - p) * z,
        T2=-(1.0 - p) * z,
        T3=p * p - (1.0 - p) ** 2 * z,
    )


def werner_ad_g1(z: float, p: float) -> float:
    """g1 of the damped Werner state (its LAQC for all z, p)."""
    return g1(-(1.0 - p) * z)


def werner_ad_g_plus(z: float, p: float) -> float:
    """g_plus of the damped Werner state (its classical correlations)."""
    return g_plus(p, p * p - (1.0 - p) ** 2 * z)


def werner_ad_concurrence(z: float, p: float) -> float:
    """Closed-form concurrence of the damped Werner state:
    max{0, (1-p)/2 [2z - sqrt(1-z) sqrt((1+p)^2 - (1-p)^2 z)]}."""
    c2 = (
        (1.0 - p)
        / 2.0
        * (2.0 * z - np.sqrt(1.0 - z) * np.sqrt((1.0 + p) ** 2 - (1.0 - p) ** 2 * z))
    )
    return float(max(0.0, c2))


def s_gap(z: float, p: float) -> float:
    """S(z, p) = g1 - g_plus of the damped Werner state (>= 0)."""
    return werner_ad_g1(z, p) - werner_ad_g_plus(z, p)


def s_prime_gap(z: float, p: float) -> float:
    """S'(z, p) = discord minus LAQC of the damped Werner state."""
    params = werner_ad_closed_form(z, p)
    laqc, _ = laqc_x(params)
    return quantum_discord_x(params).discord - laqc


def esd_threshold(z: float, tol: float = 1e-6) -> float:
    """Smallest channel parameter p* at which the damped Werner state's
    concurrence vanishes (entanglement sudden death), by bisection.

    Raises ValueError when the state is unentangled already at p = 0.
    """
    if werner_ad_concurrence(z, 0.0) <= 0.0:
        raise ValueError(f"Werner(z={z}) is not entangled; no death point")
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if werner_ad_concurrence(z, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0
