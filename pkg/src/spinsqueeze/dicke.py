"""Symmetric (Dicke-basis) states of N qubits and their collective-spin moments.

A symmetric state lives in the (N+1)-dimensional span of the Dicke states
|n>, n = 0..N, where n counts excitations and the Sz eigenvalue is n - N/2.
All ladder coefficients follow S+|n> = sqrt((N-n)(n+1)) |n+1>.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
PARITY_TOL = 1e-12


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class SymmetricState:
    """Normalized amplitudes c_0..c_N over the Dicke basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError(f"need at least one qubit, got {self.n_qubits}")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.n_qubits + 1,):
            raise ValueError(
                f"expected {self.n_qubits + 1} amplitudes, got shape {amps.shape}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        self.validate()

    def validate(self):
        """Re-check normalization on demand."""
        norm2 = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm2 - 1.0) > 10 * NORM_TOL:
            raise ValueError(f"state not normalized: sum |c_n|^2 = {norm2!r}")


@dataclass(frozen=True)
class CollectiveMoments:
    """First and second moments of the collective spin operators.

    sp_mean, sp2 and anti_sp_sz are the complex expectations <S+>, <S+^2>
    and <[S+, Sz]_+>; everything else is real.
    """

    n_qubits: int
    mean_sx: float
    mean_sy: float
    mean_sz: float
    sz2: float
    sx2: float
    sy2: float
    sp_mean: complex
    sp2: complex
    anti_sp_sz: complex
    anti_sx_sy: float

    @property
    def mean_spin(self) -> np.ndarray:
        return np.array([self.mean_sx, self.mean_sy, self.mean_sz])

    @property
    def mean_spin_norm(self) -> float:
        return float(np.linalg.norm(self.mean_spin))

    @property
    def covariance(self) -> np.ndarray:
        """Symmetrized second-moment matrix <[S_a, S_b]_+>/2."""
        cxy = 0.5 * self.anti_sx_sy
        cxz = 0.5 * self.anti_sp_sz.real
        cyz = 0.5 * self.anti_sp_sz.imag
        return np.array(
            [
                [self.sx2, cxy, cxz],
                [cxy, self.sy2, cyz],
                [cxz, cyz, self.sz2],
            ]
        )


def ladder_coefficients(n_qubits: int) -> np.ndarray:
    """a_n = sqrt((N-n)(n+1)) for n = 0..N-1, so S+|n> = a_n |n+1>."""
    n = np.arange(n_qubits)
    return np.sqrt((n_qubits - n) * (n + 1.0))


def collective_operators(n_qubits: int):
    """Dense (N+1)x(N+1) matrices (sx, sy, sz, sp, sm) in the Dicke basis."""
    a = ladder_coefficients(n_qubits)
    dim = n_qubits + 1
    sp = np.zeros((dim, dim), dtype=complex)
    sp[np.arange(1, dim), np.arange(dim - 1)] = a
    sm = sp.conj().T
    sx = 0.5 * (sp + sm)
    sy = -0.5j * (sp - sm)
    sz = np.diag(np.arange(dim) - n_qubits / 2.0).astype(complex)
    return sx, sy, sz, sp, sm


def make_dicke_state(n_qubits: int, n_excited: int) -> SymmetricState:
    """Basis state |n> with exactly n_excited excitations."""
    if not 0 <= n_excited <= n_qubits:
        raise ValueError(
            f"excitation number {n_excited} out of range for N={n_qubits}"
        )
    amps = np.zeros(n_qubits + 1, dtype=complex)
    amps[n_excited] = 1.0
    return SymmetricState(n_qubits, amps)


def make_all_down(n_qubits: int) -> SymmetricState:
    """The all-qubits-down product state |0>, the standard initial state."""
    if n_qubits < 1:
        raise ValueError(f"need at least one qubit, got {n_qubits}")
    return make_dicke_state(n_qubits, 0)


def make_state(n_qubits, amplitudes):
    """Normalize an amplitude vector into a SymmetricState.

    Returns (state, norm) where norm is the factor the input was divided by.
    """
    amps = np.asarray(amplitudes, dtype=complex)
    if amps.shape != (n_qubits + 1,):
        raise ValueError(
            f"expected {n_qubits + 1} amplitudes, got shape {amps.shape}"
        )
    norm = float(np.linalg.norm(amps))
    if norm <= NORM_TOL:
        raise ValueError("amplitude vector has near-zero norm")
    return SymmetricState(n_qubits, amps / norm), norm


def parity_class(state: SymmetricState) -> Parity:
    """Classify by which excitation-number parity sectors are populated."""
    probs = np.abs(state.amplitudes) ** 2
    even_weight = float(probs[0::2].sum())
    odd_weight = float(probs[1::2].sum())
    if odd_weight <= PARITY_TOL:
        return Parity.EVEN
    if even_weight <= PARITY_TOL:
        return Parity.ODD
    return Parity.MIXED


def collective_moments(state: SymmetricState) -> CollectiveMoments:
    """All collective first/second moments, exact to floating precision."""
    n_qubits = state.n_qubits
    c = state.amplitudes
    probs = np.abs(c) ** 2
    m = np.arange(n_qubits + 1) - n_qubits / 2.0
    a = ladder_coefficients(n_qubits)

    mean_sz = float(probs @ m)
    sz2 = float(probs @ m**2)
    # <S+> couples n -> n+1, <S+^2> couples n -> n+2
    sp_mean = complex(np.sum(np.conj(c[1:]) * a * c[:-1]))
    sp2 = complex(np.sum(np.conj(c[2:]) * a[1:] * a[:-1] * c[:-2]))
    anti_sp_sz = complex(np.sum(np.conj(c[1:]) * a * (m[:-1] + m[1:]) * c[:-1]))

    # Sx^2 + Sy^2 = J(J+1) - Sz^2 and Sx^2 - Sy^2 + i[Sx,Sy]_+ = S+^2
    j = n_qubits / 2.0
    perp_total = j * (j + 1.0) - sz2
    sx2 = 0.5 * (perp_total + sp2.real)
    sy2 = 0.5 * (perp_total - sp2.real)

    return CollectiveMoments(
        n_qubits=n_qubits,
        mean_sx=sp_mean.real,
        mean_sy=sp_mean.imag,
        mean_sz=mean_sz,
        sz2=sz2,
        sx2=sx2,
        sy2=sy2,
        sp_mean=sp_mean,
        sp2=sp2,
        anti_sp_sz=anti_sp_sz,
        anti_sx_sy=sp2.imag,
    )


def mix_moments(ensemble) -> CollectiveMoments:
    """Convex combination of moments; valid because moments are affine in rho.

    ensemble: iterable of (weight, CollectiveMoments) pairs.
    """
    ensemble = list(ensemble)
    if not ensemble:
        raise ValueError("empty ensemble")
    weights = np.array([w for w, _ in ensemble], dtype=float)
    if np.any(weights < 0):
        raise ValueError("negative weight in ensemble")
    if abs(weights.sum() - 1.0) > 1e-12:
        raise ValueError(f"weights sum to {weights.sum()!r}, expected 1")
    n_qubits = ensemble[0][1].n_qubits
    if any(m.n_qubits != n_qubits for _, m in ensemble):
        raise ValueError("mixed qubit counts in ensemble")

    def avg(attr):
        return sum(w * getattr(m, attr) for w, m in ensemble)

    return CollectiveMoments(
        n_qubits=n_qubits,
        mean_sx=avg("mean_sx"),
        mean_sy=avg("mean_sy"),
        mean_sz=avg("mean_sz"),
        sz2=avg("sz2"),
        sx2=avg("sx2"),
        sy2=avg("sy2"),
        sp_mean=avg("sp_mean"),
        sp2=avg("sp2"),
        anti_sp_sz=avg("anti_sp_sz"),
        anti_sx_sy=avg("anti_sx_sy"),
    )
