"""Two-qubit state representation: density matrices, Fano-Bloch form, named
state families, reduced states and entropy primitives.

Basis ordering is fixed as |00>, |01>, |10>, |11> with subsystem A the left
tensor factor.  All objects are immutable; all operations are pure functions.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

HERM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
CLASS_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET_00 = np.array([1, 0, 0, 0], dtype=complex)
KET_01 = np.array([0, 1, 0, 0], dtype=complex)
KET_10 = np.array([0, 0, 1, 0], dtype=complex)
KET_11 = np.array([0, 0, 0, 1], dtype=complex)
PSI_MINUS = (KET_01 - KET_10) / np.sqrt(2)
PSI_PLUS = (KET_01 + KET_10) / np.sqrt(2)
PHI_PLUS = (KET_00 + KET_11) / np.sqrt(2)
PHI_MINUS = (KET_00 - KET_11) / np.sqrt(2)


class StateValidationError(ValueError):
    """Raised when a candidate state violates a named invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


def xlog2(p):
    """Elementwise p*log2(p) with the 0*log2(0) = 0 convention."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    mask = p > 0.0
    out[mask] = p[mask] * np.log2(p[mask])
    return out


@dataclass(frozen=True)
class DensityMatrix4:
    """A validated 4x4 two-qubit density matrix.

    Invariants (checked on construction): Hermitian to 1e-12, unit trace to
    1e-12, positive semidefinite to -1e-10.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise StateValidationError("shape", f"expected 4x4, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERM_TOL:
            raise StateValidationError(
                "hermitian", f"max |m - m^dag| = {np.max(np.abs(m - m.conj().T)):.3e}"
            )
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise StateValidationError("unit-trace", f"trace = {tr!r}")
        evals = np.linalg.eigvalsh(m)
        if evals.min() < -PSD_TOL:
            raise StateValidationError(
                "positive-semidefinite", f"min eigenvalue = {evals.min():.3e}"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class FanoBloch:
    """Fano-Bloch parameters: local Bloch vectors a, b and correlation tensor T."""

    a: np.ndarray
    b: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).reshape(3)
        b = np.asarray(self.b, dtype=float).reshape(3)
        T = np.asarray(self.T, dtype=float).reshape(3, 3)
        for name, arr in (("a", a), ("b", b), ("T", T)):
            if not np.all(np.isfinite(arr)):
                raise StateValidationError("finite", f"non-finite entries in {name}")
            if np.max(np.abs(arr)) > 1.0 + 1e-12:
                raise StateValidationError(
                    "bloch-range", f"|{name}| entries exceed 1: {np.max(np.abs(arr))}"
                )
        for arr in (a, b, T):
            arr.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "T", T)


class SymmetryClass(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTI_SYMMETRIC = "anti-symmetric"
    BELL_DIAGONAL = "bell-diagonal"
    OTHER = "other"


@dataclass(frozen=True)
class XStateParams:
    """Canonical X-state parameters (x3, y3, T1, T2, T3).

    The symmetry class is derived: x3 = y3 != 0 is symmetric, x3 = -y3 != 0
    anti-symmetric, x3 = y3 = 0 Bell diagonal.
    """

    x3: float
    y3: float
    T1: float
    T2: float
    T3: float

    @property
    def symmetry_class(self) -> SymmetryClass:
        if abs(self.x3) <= CLASS_TOL and abs(self.y3) <= CLASS_TOL:
            return SymmetryClass.BELL_DIAGONAL
        if abs(self.x3 - self.y3) <= CLASS_TOL:
            return SymmetryClass.SYMMETRIC
        if abs(self.x3 + self.y3) <= CLASS_TOL:
            return SymmetryClass.ANTI_SYMMETRIC
        return SymmetryClass.OTHER

    def to_fano(self) -> FanoBloch:
        return FanoBloch(
            a=np.array([0.0, 0.0, self.x3]),
            b=np.array([0.0, 0.0, self.y3]),
            T=np.diag([self.T1, self.T2, self.T3]),
        )

    def diagonal(self) -> np.ndarray:
        """Density-matrix diagonal (rho_11, rho_22, rho_33, rho_44)."""
        x3, y3, T3 = self.x3, self.y3, self.T3
        return np.array(
            [
                (1 + x3 + y3 + T3) / 4,
                (1 + x3 - y3 - T3) / 4,
                (1 - x3 + y3 - T3) / 4,
                (1 - x3 - y3 + T3) / 4,
            ]
        )


def x_state_eigenvalues(p: XStateParams) -> np.ndarray:
    """Eigenvalues of the canonical X state, descending.

    lambda_{1,2} = [1 - T3 +/- sqrt((x3-y3)^2 + (T1+T2)^2)]/4,
    lambda_{3,4} = [1 + T3 +/- sqrt((x3+y3)^2 + (T1-T2)^2)]/4.
    """
    r_minus = np.sqrt((p.x3 - p.y3) ** 2 + (p.T1 + p.T2) ** 2)
    r_plus = np.sqrt((p.x3 + p.y3) ** 2 + (p.T1 - p.T2) ** 2)
    lams = np.array(
        [
            (1 - p.T3 + r_minus) / 4,
            (1 - p.T3 - r_minus) / 4,
            (1 + p.T3 + r_plus) / 4,
            (1 + p.T3 - r_plus) / 4,
        ]
    )
    return np.sort(lams)[::-1]


def density_from_bloch(fb: FanoBloch) -> DensityMatrix4:
    """Reconstruct the density matrix from Fano-Bloch parameters.

    rho = (1/4)(I4 + sum a_n sigma_n x I + sum b_n I x sigma_n
               + sum T_mn sigma_m x sigma_n)
    """
    m = np.eye(4, dtype=complex)
    for n in range(3):
        m += fb.a[n] * np.kron(PAULIS[n], I2)
        m += fb.b[n] * np.kron(I2, PAULIS[n])
    for i in range(3):
        for j in range(3):
            if fb.T[i, j] != 0.0:
                m += fb.T[i, j] * np.kron(PAULIS[i], PAULIS[j])
    return DensityMatrix4(m / 4)


def bloch_from_density(rho: DensityMatrix4) -> FanoBloch:
    """Extract Fano-Bloch parameters by Pauli traces (exact inverse of
    density_from_bloch)."""
    m = rho.matrix
    a = np.array([np.trace(m @ np.kron(s, I2)).real for s in PAULIS])
    b = np.array([np.trace(m @ np.kron(I2, s)).real for s in PAULIS])
    T = np.array(
        [[np.trace(m @ np.kron(si, sj)).real for sj in PAULIS] for si in PAULIS]
    )
    return FanoBloch(a=a, b=b, T=T)


def x_params_from_density(rho: DensityMatrix4) -> XStateParams:
    fb = bloch_from_density(rho)
    return XStateParams(
        x3=fb.a[2], y3=fb.b[2], T1=fb.T[0, 0], T2=fb.T[1, 1], T3=fb.T[2, 2]
    )


def is_x_shaped(rho: DensityMatrix4, tol: float = 1e-12) -> bool:
    """True if only diagonal and anti-diagonal entries are nonzero."""
    m = rho.matrix
    mask = np.zeros((4, 4), dtype=bool)
    for i in range(4):
        mask[i, i] = True
        mask[i, 3 - i] = True
    return bool(np.max(np.abs(m[~mask])) <= tol)


# --- named state families ---------------------------------------------------

FAMILY_KINDS = ("werner", "psi-minus-mix", "ara-mix", "verstraete-mix")


@dataclass(frozen=True)
class StateFamily:
    """A named one-parameter family; parameter must lie in [0, 1]."""

    kind: str
    param: float

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if not (0.0 <= self.param <= 1.0):
            raise ValueError(f"family parameter {self.param} outside [0, 1]")


def _pure(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, ket.conj())


def make_family(f: StateFamily) -> DensityMatrix4:
    """Build the density matrix of a named family.

    werner(z):         z |Psi-><Psi-| + (1-z)/4 I4
    psi-minus-mix(F):  F |Psi-><Psi-| + (1-F) |00><00|
    ara-mix(F):        F |Psi+><Psi+| + (1-F) |11><11|
    verstraete-mix(F): F |Phi+><Phi+| + (1-F) |01><01|
    """
    p = f.param
    if f.kind == "werner":
        m = p * _pure(PSI_MINUS) + (1 - p) * np.eye(4) / 4
    elif f.kind == "psi-minus-mix":
        m = p * _pure(PSI_MINUS) + (1 - p) * _pure(KET_00)
    elif f.kind == "ara-mix":
        m = p * _pure(PSI_PLUS) + (1 - p) * _pure(KET_11)
    else:
        m = p * _pure(PHI_PLUS) + (1 - p) * _pure(KET_01)
    return DensityMatrix4(m)


def werner(z: float) -> DensityMatrix4:
    return make_family(StateFamily("werner", z))


def psi_minus_mix(F: float) -> DensityMatrix4:
    return make_family(StateFamily("psi-minus-mix", F))


def ara_mix(F: float) -> DensityMatrix4:
    return make_family(StateFamily("ara-mix", F))


def verstraete_mix(F: float) -> DensityMatrix4:
    return make_family(StateFamily("verstraete-mix", F))


# --- reduced states, spectra, entropy ---------------------------------------


def partial_trace(rho: DensityMatrix4, subsystem: str) -> np.ndarray:
    """Reduced 2x2 density matrix of subsystem "A" or "B" (traces out the
    other one)."""
    m = rho.matrix.reshape(2, 2, 2, 2)
    if subsystem == "A":
        return np.einsum("ikjk->ij", m)
    if subsystem == "B":
        return np.einsum("kikj->ij", m)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending."""
    m = np.asarray(m, dtype=complex)
    if np.max(np.abs(m - m.conj().T)) > 1e-10:
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(m)[::-1]


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy in bits, -sum lambda log2 lambda.

    Accepts a DensityMatrix4 or a raw Hermitian array of any dimension <= 4.
    Eigenvalues in [-1e-10, 0) are clamped to 0; below that is an error.
    """
    m = rho.matrix if isinstance(rho, DensityMatrix4) else np.asarray(rho, complex)
    evals = np.linalg.eigvalsh(m)
    if evals.min() < -PSD_TOL:
        raise StateValidationError(
            "positive-semidefinite", f"min eigenvalue = {evals.min():.3e}"
        )
    evals = np.clip(evals, 0.0, None)
    return float(-xlog2(evals).sum())


# --- JSON state format ------------------------------------------------------


def state_from_json_dict(obj: dict) -> DensityMatrix4:
    """Load a state from the JSON wire format.

    Accepted shapes:
      {"matrix": [[{"re": r, "im": i}, ...] x4]}
      {"bloch": {"x3": ..., "y3": ..., "T1": ..., "T2": ..., "T3": ...}}
      {"family": {"kind": "werner", "param": 0.5}}
    """
    keys = set(obj) & {"matrix", "bloch", "family"}
    if len(keys) != 1:
        raise StateValidationError(
            "format", "expected exactly one of 'matrix', 'bloch', 'family'"
        )
    key = keys.pop()
    if key == "matrix":
        rows = obj["matrix"]
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise StateValidationError("shape", "matrix must be 4x4")
        m = np.array(
            [[complex(c["re"], c["im"]) for c in row] for row in rows], dtype=complex
        )
        return DensityMatrix4(m)
    if key == "bloch":
        b = obj["bloch"]
        params = XStateParams(
            x3=float(b["x3"]),
            y3=float(b["y3"]),
            T1=float(b["T1"]),
            T2=float(b["T2"]),
            T3=float(b["T3"]),
        )
        return density_from_bloch(params.to_fano())
    fam = obj["family"]
    return make_family(StateFamily(kind=fam["kind"], param=float(fam["param"])))


def state_from_json(text_or_path) -> DensityMatrix4:
    """Parse a JSON document (string or file path) into a validated state."""
    text = str(text_or_path)
    if not text.lstrip().startswith("{"):
        with open(text) as fh:
            text = fh.read()
    return state_from_json_dict(json.loads(text))
