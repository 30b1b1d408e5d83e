import numpy as np
import pytest

from clustersim.states import DensityMatrix, PureState


def random_pure_state(n_qubits: int, rng) -> PureState:
    amps = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return PureState.from_amplitudes(amps)


def random_density_matrix(n_qubits: int, rng) -> DensityMatrix:
    dim = 2**n_qubits
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return DensityMatrix(n_qubits, rho / np.trace(rho))


def random_single_qubit_unitary(rng) -> np.ndarray:
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def ket(*factors) -> np.ndarray:
    """Tensor product of single-qubit vectors given as 2-element sequences."""
    out = np.array([1.0], dtype=complex)
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
