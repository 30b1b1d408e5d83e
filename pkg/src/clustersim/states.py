"""Dense pure-state and density-matrix simulation of small qubit registers.

Conventions used throughout the package:
  * Qubit 1 is the most significant bit of the amplitude index, so the
    Pauli word "ZZII" reads left-to-right as Z on qubits 1 and 2.
  * Basis label 0 is |H> (horizontal polarization), 1 is |V>.
  * All state comparisons are fidelity-based; global phase is never fixed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

NORM_ATOL = 1e-10
PSD_ATOL = 1e-8

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


@dataclass(frozen=True)
class PureState:
    """Normalized complex amplitude vector over n qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError("n_qubits must be nonnegative")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes, got {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.2e}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amps) -> "PureState":
        """Build a state from an unnormalized amplitude vector."""
        amps = np.asarray(amps, dtype=complex)
        n = int(round(math.log2(amps.size)))
        if 2**n != amps.size:
            raise ValueError("amplitude length must be a power of two")
        norm = np.linalg.norm(amps)
        if norm < 1e-12:
            raise ValueError("zero vector cannot be normalized")
        return cls(n, amps / norm)

    def amplitude(self, label: str) -> complex:
        """Amplitude of a computational basis label like 'HHVV' or '0011'."""
        return self.amplitudes[basis_index(label)]

    def to_density(self) -> "DensityMatrix":
        return DensityMatrix(self.n_qubits, np.outer(self.amplitudes, self.amplitudes.conj()))

    def tensor(self, other: "PureState") -> "PureState":
        return PureState(self.n_qubits + other.n_qubits, np.kron(self.amplitudes, other.amplitudes))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n_qubits,
                "re": self.amplitudes.real.tolist(),
                "im": self.amplitudes.imag.tolist(),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "PureState":
        obj = json.loads(text)
        amps = np.array(obj["re"], dtype=float) + 1j * np.array(obj["im"], dtype=float)
        return cls(obj["n"], amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator on n qubits."""

    n_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        dim = 2**self.n_qubits
        mat = np.asarray(self.entries, dtype=complex)
        if mat.shape != (dim, dim):
            raise ValueError(f"expected {dim}x{dim} matrix, got {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > NORM_ATOL:
            raise ValueError("matrix is not Hermitian")
        if abs(np.trace(mat).real - 1.0) > NORM_ATOL:
            raise ValueError("trace is not 1")
        if np.linalg.eigvalsh(mat)[0] < -PSD_ATOL:
            raise ValueError("matrix has a significantly negative eigenvalue")
        mat = mat.copy()
        mat.flags.writeable = False
        object.__setattr__(self, "entries", mat)

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 2**n_qubits
        return cls(n_qubits, np.eye(dim, dtype=complex) / dim)


@dataclass(frozen=True)
class PauliString:
    """A Pauli word like 'ZZII' with a real coefficient."""

    word: str
    coefficient: float = 1.0

    def __post_init__(self):
        if not self.word or any(c not in "IXYZ" for c in self.word):
            raise ValueError(f"invalid Pauli word {self.word!r}")

    def dense(self) -> np.ndarray:
        op = np.array([[self.coefficient]], dtype=complex)
        for letter in self.word:
            op = np.kron(op, PAULI_MATRICES[letter])
        return op


@dataclass(frozen=True)
class LocalBasis:
    """A single-qubit measurement basis.

    planar_std(t) is {(|0> + e^{-it}|1>)/sqrt2, (|0> - e^{-it}|1>)/sqrt2};
    planar_had(t) is the same with |0>,|1> replaced by |+>,|->.
    Outcome bit 0 corresponds to the first vector.
    """

    kind: str
    theta: float = 0.0

    _KINDS = ("Z", "X", "Y", "planar_std", "planar_had")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    @classmethod
    def z(cls):
        return cls("Z")

    @classmethod
    def x(cls):
        return cls("X")

    @classmethod
    def y(cls):
        return cls("Y")

    @classmethod
    def planar_std(cls, theta: float):
        return cls("planar_std", theta)

    @classmethod
    def planar_had(cls, theta: float):
        return cls("planar_had", theta)

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """The ordered pair of basis vectors (outcome 0, outcome 1)."""
        if self.kind == "Z":
            return np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)
        theta = {"X": 0.0, "Y": math.pi / 2}.get(self.kind, self.theta)
        phase = np.exp(-1j * theta)
        if self.kind == "planar_had":
            plus = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2)
            minus = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2)
            v0 = (plus + phase * minus) / math.sqrt(2)
            v1 = (plus - phase * minus) / math.sqrt(2)
        else:
            v0 = np.array([1.0, phase], dtype=complex) / math.sqrt(2)
            v1 = np.array([1.0, -phase], dtype=complex) / math.sqrt(2)
        return v0, v1


# --- gate descriptors ---------------------------------------------------


@dataclass(frozen=True)
class RZ:
    theta: float

    def matrix(self) -> np.ndarray:
        return np.array(
            [[np.exp(-1j * self.theta / 2), 0.0], [0.0, np.exp(1j * self.theta / 2)]],
            dtype=complex,
        )


@dataclass(frozen=True)
class RX:
    theta: float

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta / 2), math.sin(self.theta / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


class CZ:
    """Controlled-Z: |j>|k> -> (-1)^{jk} |j>|k>."""


# --- label helpers ------------------------------------------------------

_BIT_OF = {"H": 0, "V": 1, "0": 0, "1": 1}


def basis_index(label: str) -> int:
    """Index of a basis label ('HHVV' or '0011'), qubit 1 most significant."""
    idx = 0
    for c in label:
        idx = (idx << 1) | _BIT_OF[c]
    return idx


def _bit(index: int, qubit: int, n: int) -> int:
    return (index >> (n - qubit)) & 1


# --- named resource states ---------------------------------------------


def cluster4() -> PureState:
    """The four-qubit cluster state with amplitudes +1/2 on HHHH, HHVV, VVHH
    and -1/2 on VVVV."""
    amps = np.zeros(16, dtype=complex)
    amps[basis_index("HHHH")] = 0.5
    amps[basis_index("HHVV")] = 0.5
    amps[basis_index("VVHH")] = 0.5
    amps[basis_index("VVVV")] = -0.5
    return PureState(4, amps)


def named_state(name: str) -> PureState:
    """Well-known reference states: ghz4, w4, dicke4, plus, minus, r, l, h, v."""
    s2 = 1 / math.sqrt(2)
    if name == "ghz4":
        amps = np.zeros(16, dtype=complex)
        amps[0] = s2
        amps[15] = s2
        return PureState(4, amps)
    if name == "w4":
        amps = np.zeros(16, dtype=complex)
        for i in (1, 2, 4, 8):
            amps[i] = 0.5
        return PureState(4, amps)
    if name == "dicke4":
        amps = np.zeros(16, dtype=complex)
        for i in range(16):
            if bin(i).count("1") == 2:
                amps[i] = 1 / math.sqrt(6)
        return PureState(4, amps)
    single = {
        "h": [1.0, 0.0],
        "v": [0.0, 1.0],
        "plus": [s2, s2],
        "minus": [s2, -s2],
        "r": [s2, 1j * s2],
        "l": [s2, -1j * s2],
    }
    if name in single:
        return PureState(1, np.array(single[name], dtype=complex))
    raise ValueError(f"unknown state name {name!r}")


# --- operations ---------------------------------------------------------


def _apply_single_qubit(amps: np.ndarray, mat: np.ndarray, qubit: int, n: int) -> np.ndarray:
    tensor = amps.reshape((2,) * n)
    axis = qubit - 1
    tensor = np.tensordot(mat, tensor, axes=([1], [axis]))
    tensor = np.moveaxis(tensor, 0, axis)
    return tensor.reshape(-1)


def apply_gate(state: PureState, gate, qubits) -> PureState:
    """Apply RZ/RX/CZ or a Pauli word to the given qubit labels (1-based)."""
    n = state.n_qubits
    qubits = list(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError("qubit labels must be distinct")
    for q in qubits:
        if not 1 <= q <= n:
            raise ValueError(f"qubit label {q} out of range 1..{n}")
    amps = np.array(state.amplitudes)
    if isinstance(gate, (RZ, RX)):
        if len(qubits) != 1:
            raise ValueError("rotation gates act on exactly one qubit")
        amps = _apply_single_qubit(amps, gate.matrix(), qubits[0], n)
    elif gate is CZ or isinstance(gate, CZ):
        if len(qubits) != 2:
            raise ValueError("CZ takes exactly two qubit labels")
        q1, q2 = qubits
        for i in range(amps.size):
            if _bit(i, q1, n) and _bit(i, q2, n):
                amps[i] = -amps[i]
    elif isinstance(gate, (str, PauliString)):
        word = gate.word if isinstance(gate, PauliString) else gate
        if len(word) != len(qubits):
            raise ValueError("Pauli word length must match qubit list")
        for letter, q in zip(word, qubits):
            if letter != "I":
                amps = _apply_single_qubit(amps, PAULI_MATRICES[letter], q, n)
    else:
        raise ValueError(f"unknown gate {gate!r}")
    return PureState(n, amps)


def fidelity(a, target: PureState) -> float:
    """<target| a |target>; for a pure state, the squared overlap magnitude."""
    if isinstance(a, PureState):
        if a.n_qubits != target.n_qubits:
            raise ValueError("qubit counts do not match")
        return float(abs(np.vdot(target.amplitudes, a.amplitudes)) ** 2)
    if isinstance(a, DensityMatrix):
        if a.n_qubits != target.n_qubits:
            raise ValueError("qubit counts do not match")
        t = target.amplitudes
        return float(np.real(np.vdot(t, a.entries @ t)))
    raise TypeError(f"unsupported state type {type(a)}")


def pauli_expectation(state, p) -> float:
    """Expectation value of a Pauli string (coefficient included)."""
    word = p.word if isinstance(p, PauliString) else p
    coeff = p.coefficient if isinstance(p, PauliString) else 1.0
    if isinstance(state, PureState):
        n = state.n_qubits
        if len(word) != n:
            raise ValueError("word length does not match register")
        amps = np.array(state.amplitudes)
        for letter, q in zip(word, range(1, n + 1)):
            if letter != "I":
                amps = _apply_single_qubit(amps, PAULI_MATRICES[letter], q, n)
        return coeff * float(np.real(np.vdot(state.amplitudes, amps)))
    if isinstance(state, DensityMatrix):
        n = state.n_qubits
        if len(word) != n:
            raise ValueError("word length does not match register")
        op = PauliString(word).dense()
        return coeff * float(np.real(np.trace(op @ state.entries)))
    raise TypeError(f"unsupported state type {type(state)}")


def measure(state: PureState, qubit: int, basis: LocalBasis, select=None, seed=None):
    """Measure one qubit and remove it from the register.

    `select` fixes the outcome bit (0 or 1); when None, the outcome is drawn
    from the Born distribution using `seed`. Returns (probability, outcome,
    collapsed state on the remaining qubits, in their original order).
    """
    n = state.n_qubits
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit label {qubit} out of range 1..{n}")
    v0, v1 = basis.vectors()
    tensor = np.asarray(state.amplitudes).reshape((2,) * n)
    axis = qubit - 1
    branch = [
        np.tensordot(v.conj(), tensor, axes=([0], [axis])).reshape(-1) for v in (v0, v1)
    ]
    probs = [float(np.linalg.norm(b) ** 2) for b in branch]
    if select is None:
        rng = np.random.default_rng(seed)
        outcome = int(rng.random() >= probs[0])
    else:
        outcome = int(select)
        if outcome not in (0, 1):
            raise ValueError("outcome bit must be 0 or 1")
    p = probs[outcome]
    if p < 1e-12:
        raise ValueError(f"selected outcome {outcome} has probability {p:.2e}")
    collapsed = PureState(n - 1, branch[outcome] / math.sqrt(p))
    return p, outcome, collapsed


def schmidt_coefficients(state: PureState, partition) -> np.ndarray:
    """Descending Schmidt coefficients for a bipartition given by qubit labels."""
    n = state.n_qubits
    part = sorted(set(partition))
    if not part or len(part) >= n:
        raise ValueError("partition must be a nonempty proper subset")
    for q in part:
        if not 1 <= q <= n:
            raise ValueError(f"qubit label {q} out of range 1..{n}")
    rest = [q for q in range(1, n + 1) if q not in part]
    tensor = np.asarray(state.amplitudes).reshape((2,) * n)
    order = [q - 1 for q in part] + [q - 1 for q in rest]
    mat = tensor.transpose(order).reshape(2 ** len(part), 2 ** len(rest))
    return np.linalg.svd(mat, compute_uv=False)
