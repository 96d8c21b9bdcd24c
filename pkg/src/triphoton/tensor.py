"""Small three-qubit tensor toolkit: pure states, local operators, reductions.

Basis convention used throughout the package: each photon (qubit) is labelled
by helicity, with helicity + mapped to bit 0 and helicity - mapped to bit 1.
Party A is the most significant bit, so the amplitude of |+ + ->
sits at index 0b001 of the flat vector.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (PAULI_X, PAULI_Y, PAULI_Z)

_BIT_FOR_HELICITY = {"+": 0, "-": 1}


def _frozen_array(values, dtype=complex) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PureState:
    """Pure n-qubit state as a flat complex amplitude vector of length 2**n."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).ravel()
        n = amp.size
        if n < 2 or (n & (n - 1)) != 0:
            raise ValueError(f"amplitude vector length {n} is not a power of two")
        object.__setattr__(self, "amplitudes", _frozen_array(amp))

    @property
    def n_qubits(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    @property
    def tensor(self) -> np.ndarray:
        """The amplitudes reshaped to one axis per party, party A first."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "PureState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return PureState(self.amplitudes / n)

    def canonical(self) -> "PureState":
        """Normalize and fix the global phase.

        The amplitude of largest magnitude (ties broken by lowest basis
        index) is rotated to be real and positive, so coefficient-level
        comparisons between equal states are reproducible.
        """
        amp = self.normalized().amplitudes
        k = int(np.argmax(np.abs(amp).round(12)))
        phase = amp[k] / abs(amp[k])
        return PureState(amp / phase)

    def amplitude(self, label: str) -> complex:
        """Amplitude of a helicity basis ket given as a string such as '++-'."""
        if len(label) != self.n_qubits or any(c not in _BIT_FOR_HELICITY for c in label):
            raise ValueError(f"bad basis label {label!r} for {self.n_qubits} qubits")
        index = 0
        for c in label:
            index = (index << 1) | _BIT_FOR_HELICITY[c]
        return complex(self.amplitudes[index])


@dataclass(frozen=True)
class LocalOperator:
    """A 2x2 complex matrix acting on a single party."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (2, 2):
            raise ValueError(f"local operator must be 2x2, got shape {mat.shape}")
        object.__setattr__(self, "matrix", _frozen_array(mat))

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return bool(np.allclose(self.matrix @ self.matrix.conj().T, np.eye(2), atol=tol))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian positive unit-trace matrix for one or more parties."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        object.__setattr__(self, "matrix", _frozen_array(mat))

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def _as_matrix(op) -> np.ndarray:
    if isinstance(op, LocalOperator):
        return op.matrix
    return np.asarray(op, dtype=complex)


def _as_qubit(v) -> np.ndarray:
    if isinstance(v, PureState):
        v = v.amplitudes
    arr = np.asarray(v, dtype=complex).ravel()
    if arr.size != 2:
        raise ValueError("single-qubit vector must have two components")
    return arr


def tensor3(u, v, w) -> PureState:
    """Product state |u> x |v> x |w> from three single-qubit vectors."""
    u, v, w = _as_qubit(u), _as_qubit(v), _as_qubit(w)
    return PureState(np.einsum("a,b,c->abc", u, v, w).ravel())


def inner(a: PureState, b: PureState) -> complex:
    """Inner product <a|b>."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("states act on different numbers of qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def apply_local(op_a, op_b, op_c, state: PureState) -> PureState:
    """Apply one local operator per party of a three-qubit state."""
    if state.n_qubits != 3:
        raise ValueError("apply_local expects a three-qubit state")
    out = np.einsum(
        "ax,by,cz,xyz->abc",
        _as_matrix(op_a),
        _as_matrix(op_b),
        _as_matrix(op_c),
        state.tensor,
    )
    return PureState(out.ravel())


def reduced_density(state: PureState, party: int) -> DensityMatrix:
    """Single-party reduced density matrix, tracing out every other party.

    Parameters
    ----------
    state : PureState
    party : int
        Index of the party to keep; 0 is party A (most significant bit).
    """
    n = state.n_qubits
    if not 0 <= party < n:
        raise ValueError(f"party index {party} out of range for {n} qubits")
    t = np.moveaxis(state.tensor, party, 0).reshape(2, -1)
    return DensityMatrix(t @ t.conj().T)


def purity(rho) -> float:
    """Tr(rho^2); 1 for pure, 1/2 for a maximally mixed single qubit."""
    if isinstance(rho, DensityMatrix):
        return rho.purity()
    return DensityMatrix(np.asarray(rho, dtype=complex)).purity()


def bloch_observable(direction) -> LocalOperator:
    """Spin observable n . sigma for a unit Bloch vector n; eigenvalues +/-1."""
    n = np.asarray(direction, dtype=float).ravel()
    if n.shape != (3,):
        raise ValueError("Bloch direction must have three components")
    length = float(np.linalg.norm(n))
    if abs(length - 1.0) > 1e-9:
        raise ValueError(f"Bloch direction must be unit length, got |n| = {length}")
    n = n / length
    return LocalOperator(n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z)


def random_local_unitary(rng) -> LocalOperator:
    """Haar-distributed 2x2 unitary.

    Parameters
    ----------
    rng : numpy.random.Generator or int
        Generator to draw from, or a seed used to create one.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    # QR alone is not Haar; the diagonal phases of R must be pushed into Q
    return LocalOperator(q * (d / np.abs(d)))


def basis_state(label: str) -> PureState:
    """Computational basis ket from a helicity string such as '+-+'."""
    n = len(label)
    amp = np.zeros(2**n, dtype=complex)
    index = 0
    for c in label:
        if c not in _BIT_FOR_HELICITY:
            raise ValueError(f"bad helicity character {c!r}")
        index = (index << 1) | _BIT_FOR_HELICITY[c]
    amp[index] = 1.0
    return PureState(amp)


def ghz_state() -> PureState:
    """(|+++> + |--->)/sqrt(2)."""
    amp = np.zeros(8, dtype=complex)
    amp[0b000] = amp[0b111] = 1.0 / np.sqrt(2.0)
    return PureState(amp)
