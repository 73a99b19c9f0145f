"""Quantum objects: kets, density matrices, POVMs, noise, Born statistics.

Complex linear algebra lives here. Conventions: 0-based basis labels,
``omega = exp(2 pi i / d)``, subsystem A first in tensor products, and
visibility ``v`` meaning ``measurement = v * ideal + (1 - v) * white noise``
(so the fully noisy limit is v = 0).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS, Tolerances
from .entropy import JointDistribution

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def is_hermitian(a: np.ndarray, tol: float = DEFAULT_TOLS.structural) -> bool:
    return bool(np.abs(a - a.conj().T).max() <= tol)


def is_psd(a: np.ndarray, tol: float = DEFAULT_TOLS.structural) -> bool:
    if not is_hermitian(a, tol):
        return False
    return bool(np.linalg.eigvalsh(a).min() >= -tol)


def _check_dim(d: int) -> int:
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    return d


@dataclass(frozen=True)
class Ket:
    """Normalized state vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > DEFAULT_TOLS.unitarity:
            raise ValueError(f"ket norm is {norm!r}, not 1")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


class DensityMatrix:
    """Quantum state: Hermitian, unit trace, positive semidefinite."""

    __slots__ = ("matrix",)

    def __init__(self, matrix, tol: Tolerances | None = None):
        t = tol or DEFAULT_TOLS
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if np.abs(m - m.conj().T).max() > t.structural:
            raise ValueError("density matrix is not Hermitian")
        tr = np.trace(m).real
        if abs(tr - 1.0) > t.structural:
            raise ValueError(f"density matrix has trace {tr!r}, not 1")
        if np.linalg.eigvalsh(m).min() < -t.structural:
            raise ValueError("density matrix has a negative eigenvalue")
        m.setflags(write=False)
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


class Povm:
    """Finite measurement: PSD effects summing to the identity."""

    __slots__ = ("effects",)

    def __init__(self, effects, tol: Tolerances | None = None):
        t = tol or DEFAULT_TOLS
        mats = tuple(np.array(e, dtype=complex) for e in effects)
        if not mats:
            raise ValueError("a POVM needs at least one effect")
        d = mats[0].shape[0]
        for e in mats:
            if e.ndim != 2 or e.shape != (d, d):
                raise ValueError("POVM effects must be square matrices of equal size")
            if not is_psd(e, t.structural):
                raise ValueError("POVM effect is not positive semidefinite")
            e.setflags(write=False)
        total = sum(mats)
        if np.abs(total - np.eye(d)).max() > t.structural:
            raise ValueError("POVM effects do not sum to the identity")
        self.effects = mats

    @classmethod
    def from_basis(cls, basis: np.ndarray) -> "Povm":
        """Rank-1 projective POVM from the columns of a unitary matrix."""
        b = np.asarray(basis, dtype=complex)
        return cls([np.outer(b[:, k], b[:, k].conj()) for k in range(b.shape[1])])

    @property
    def dim(self) -> int:
        return self.effects[0].shape[0]

    @property
    def n_outcomes(self) -> int:
        return len(self.effects)

    def is_rank1_projective(self, tol: float = DEFAULT_TOLS.projective) -> bool:
        for e in self.effects:
            if abs(np.trace(e).real - 1.0) > tol:
                return False
            if np.abs(e @ e - e).max() > tol:
                return False
        return True

    def __repr__(self) -> str:
        return f"Povm(dim={self.dim}, n_outcomes={self.n_outcomes})"


@dataclass(frozen=True)
class QubitBinaryPovm:
    """Two-outcome qubit measurement (I +- (b I + r.sigma))/2.

    ``bias`` is the outcome imbalance b; ``bloch`` the subnormalized Bloch
    vector r.  Validity of both effects requires |b| + |r| <= 1; the
    visibility of the measurement is |r|.
    """

    bias: float
    bloch: tuple[float, float, float]

    def __post_init__(self):
        r = np.asarray(self.bloch, dtype=float)
        if r.shape != (3,):
            raise ValueError("bloch must be a real 3-vector")
        if abs(self.bias) + np.linalg.norm(r) > 1.0 + DEFAULT_TOLS.prob_negativity:
            raise ValueError(
                f"invalid qubit POVM: |bias| + |bloch| = "
                f"{abs(self.bias) + np.linalg.norm(r):.6f} exceeds 1"
            )
        object.__setattr__(self, "bloch", (float(r[0]), float(r[1]), float(r[2])))

    def to_povm(self) -> Povm:
        shift = self.bias * np.eye(2) + sum(c * s for c, s in zip(self.bloch, PAULI))
        return Povm([(np.eye(2) + shift) / 2.0, (np.eye(2) - shift) / 2.0])


def qubit_povm(bias: float, bloch) -> Povm:
    """Two-effect qubit POVM from a bias and a subnormalized Bloch vector."""
    return QubitBinaryPovm(float(bias), tuple(np.asarray(bloch, dtype=float))).to_povm()


def fourier_matrix(d: int) -> np.ndarray:
    """Discrete Fourier matrix F[j,k] = omega^(-jk)/sqrt(d), omega = e^(2 pi i/d)."""
    d = _check_dim(d)
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return np.exp(-2j * np.pi * j * k / d) / np.sqrt(d)


def mub_pair(d: int) -> tuple[Povm, Povm]:
    """Computational basis and its Fourier transform: two mutually unbiased bases."""
    d = _check_dim(d)
    comp = Povm.from_basis(np.eye(d, dtype=complex))
    fourier = Povm.from_basis(fourier_matrix(d))
    return comp, fourier


def depolarize(p: Povm, v: float) -> Povm:
    """Mix each effect with white noise: E -> v E + (1 - v) tr(E) I/d."""
    v = float(v)
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"visibility must lie in [0, 1], got {v!r}")
    d = p.dim
    eye = np.eye(d)
    return Povm([v * e + (1.0 - v) * np.trace(e).real * eye / d for e in p.effects])


def max_entangled_state(d: int) -> DensityMatrix:
    """Normalized maximally entangled state (1/d) sum_ij |ii><jj|."""
    d = _check_dim(d)
    phi = np.eye(d, dtype=complex).reshape(-1) / np.sqrt(d)
    return DensityMatrix(np.outer(phi, phi.conj()))


def partial_trace(matrix: np.ndarray, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Trace out one factor of a bipartite operator; ``keep`` is 0 (A) or 1 (B)."""
    da, db = dims
    m = np.asarray(matrix, dtype=complex).reshape(da, db, da, db)
    if keep == 0:
        return np.einsum("ikjk->ij", m)
    if keep == 1:
        return np.einsum("kikj->ij", m)
    raise ValueError("keep must be 0 or 1")


def joint_distribution(rho: DensityMatrix, alice: Povm, bob: Povm) -> JointDistribution:
    """Born-rule outcome table p(a, b) = tr[(E_a (x) F_b) rho].

    Subsystem A is the first tensor factor; the returned table has Alice's
    outcome on the first axis.
    """
    da, db = alice.dim, bob.dim
    if rho.dim != da * db:
        raise ValueError(
            f"state dimension {rho.dim} does not match measurements {da}x{db}"
        )
    e = np.stack(alice.effects)
    f = np.stack(bob.effects)
    rho4 = rho.matrix.reshape(da, db, da, db)
    # tr[(E (x) F) rho] = sum E[i,j] F[k,l] rho[(j,l),(i,k)]
    table = np.einsum("aij,bkl,jlik->ab", e, f, rho4).real
    return JointDistribution(table)


# ---------------------------------------------------------------------------
# d = 3 rotated-basis family
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=1)
def _d3_rotation_frame() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fixed data for the d=3 family: (Z basis, relabeled X basis, generator).

    The rotation generator projects onto one vector of a third basis that is
    mutually unbiased with both the computational and the Fourier basis: the
    eigenbasis of the Weyl clock-shift product, eigenvalues ordered by phase
    in [0, 2 pi).  The Fourier-basis columns are relabeled once so that the
    two rotated bases coincide outcome-by-outcome at t = 1/2.
    """
    d = 3
    comp = np.eye(d, dtype=complex)
    four = fourier_matrix(d)

    shift = np.zeros((d, d), dtype=complex)
    for j in range(d):
        shift[(j + 1) % d, j] = 1.0
    clock = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    evals, evecs = np.linalg.eig(shift @ clock)
    order = np.argsort(np.angle(evals) % (2.0 * np.pi))
    first = evecs[:, order[0]]
    first = first / np.linalg.norm(first)
    proj = np.outer(first, first.conj())

    def half_turn(sign):
        return np.eye(d) + (np.exp(sign * 1j * np.pi / d) - 1.0) * proj

    # outcome pairing at the coincidence point t = 1/2
    overlap = np.abs((half_turn(+1) @ comp).conj().T @ (half_turn(-1) @ four))
    perm = np.argmax(overlap, axis=1)
    if sorted(perm) != list(range(d)):
        raise AssertionError("coincidence pairing is not a permutation")
    return comp, four[:, perm], proj


def rotated_d3_bases(t: float) -> tuple[Povm, Povm]:
    """The d=3 family interpolating from a MUB pair (t=0) to equal bases (t=1/2).

    Both bases of the Fourier-connected pair are rotated by conjugate phase
    factors generated by a third-basis projector; their pairwise overlap
    grows with ``t`` until the bases coincide at t = 1/2.
    """
    t = float(t)
    if not 0.0 <= t <= 0.5:
        raise ValueError(f"family parameter must lie in [0, 0.5], got {t!r}")
    comp, four, proj = _d3_rotation_frame()
    phase = np.exp(2j * np.pi * t / 3.0)
    u_plus = np.eye(3) + (phase - 1.0) * proj
    u_minus = np.eye(3) + (phase.conjugate() - 1.0) * proj
    return Povm.from_basis(u_plus @ comp), Povm.from_basis(u_minus @ four)
