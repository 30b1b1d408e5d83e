"""Simple noise channels linking ideal states to measured fidelities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import PAULI_MATRICES, DensityMatrix, PureState


@dataclass(frozen=True)
class NoiseSpec:
    """White noise mixes in the maximally mixed state with weight 1-p;
    dephasing applies a phase flip with probability p per listed qubit."""

    kind: str
    p: float
    qubits: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("white", "dephase"):
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("noise parameter must lie in [0, 1]")
        if self.qubits is not None:
            object.__setattr__(self, "qubits", tuple(self.qubits))

    @classmethod
    def parse(cls, text: str) -> "NoiseSpec":
        """Parse 'white:0.86' or 'dephase:0.05:1,2'."""
        parts = text.split(":")
        if parts[0] == "white" and len(parts) == 2:
            return cls("white", float(parts[1]))
        if parts[0] == "dephase" and len(parts) in (2, 3):
            qubits = None
            if len(parts) == 3:
                qubits = tuple(int(q) for q in parts[2].split(","))
            return cls("dephase", float(parts[1]), qubits)
        raise ValueError(f"cannot parse noise spec {text!r}")


def _dephase_one(rho: np.ndarray, p: float, qubit: int, n: int) -> np.ndarray:
    z = np.array([[1.0]], dtype=complex)
    for q in range(1, n + 1):
        z = np.kron(z, PAULI_MATRICES["Z" if q == qubit else "I"])
    return (1 - p) * rho + p * (z @ rho @ z)


def apply_noise(state: PureState, spec: NoiseSpec) -> DensityMatrix:
    """Apply the channel to a pure state, returning a density matrix."""
    n = state.n_qubits
    rho = np.outer(state.amplitudes, state.amplitudes.conj())
    if spec.kind == "white":
        dim = 2**n
        rho = spec.p * rho + (1 - spec.p) * np.eye(dim, dtype=complex) / dim
    else:
        qubits = spec.qubits if spec.qubits is not None else tuple(range(1, n + 1))
        for q in qubits:
            if not 1 <= q <= n:
                raise ValueError(f"qubit label {q} out of range 1..{n}")
            rho = _dephase_one(rho, spec.p, q, n)
    return DensityMatrix(n, rho)


def fit_white_p(b4_value: float) -> float:
    """Invert the linear relation between white-noise weight and the
    four-setting witness value (they are equal)."""
    if not 0.0 <= b4_value <= 1.0:
        raise ValueError("witness value must lie in [0, 1]")
    return b4_value
