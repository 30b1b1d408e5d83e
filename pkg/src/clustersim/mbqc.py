"""One-way quantum-computing patterns on the four-qubit cluster resource.

A pattern is an ordered list of single-qubit measurements plus a table of
outcome-conditioned Pauli corrections on the output qubits. Corrections
are derived by exhaustive search so that every outcome branch collapses,
after correction, to the same circuit-model target state.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .states import (
    CZ,
    RX,
    RZ,
    DensityMatrix,
    LocalBasis,
    PauliString,
    PureState,
    apply_gate,
    cluster4,
    fidelity,
    measure,
    named_state,
)

FEEDFORWARD_FID_TOL = 1e-9


@dataclass(frozen=True)
class GateInstruction:
    """The two measurement angles (alpha, beta) selecting a gate."""

    alpha: float
    beta: float


@dataclass(frozen=True)
class MeasurementPattern:
    resource_size: int
    steps: tuple  # ordered (qubit label, LocalBasis) pairs
    output_qubits: tuple
    corrections: dict  # outcome bitstring -> Pauli word on output qubits
    target: PureState | None = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "output_qubits", tuple(self.output_qubits))
        measured = {q for q, _ in self.steps}
        if measured & set(self.output_qubits):
            raise ValueError("measured and output qubits must be disjoint")
        if measured | set(self.output_qubits) != set(range(1, self.resource_size + 1)):
            raise ValueError("steps and outputs must cover the register")
        if len(self.corrections) != 2 ** len(self.steps):
            raise ValueError("corrections must have one entry per outcome bitstring")


def _run_steps(steps, resource: PureState, branch: str):
    """Measure the listed qubits in order with fixed outcomes; returns the
    residual state on the unmeasured qubits and the branch probability."""
    labels = list(range(1, resource.n_qubits + 1))
    state = resource
    prob = 1.0
    for (qubit, basis), bit in zip(steps, branch):
        pos = labels.index(qubit) + 1
        p, _, state = measure(state, pos, basis, select=int(bit))
        prob *= p
        labels.pop(pos - 1)
    return state, prob


def derive_feedforward(steps, output_qubits, resource: PureState, target: PureState) -> dict:
    """Find, for every outcome branch, the Pauli word on the output qubits
    that maps the residual state onto the target.

    Search order is lexicographic over I < X < Y < Z; raises if some branch
    is not Pauli-equivalent to the target (wrong pattern or resource).
    """
    n_out = len(output_qubits)
    corrections = {}
    for bits in itertools.product("01", repeat=len(steps)):
        branch = "".join(bits)
        state, _ = _run_steps(steps, resource, branch)
        for word in itertools.product("IXYZ", repeat=n_out):
            word = "".join(word)
            corrected = apply_gate(state, word, range(1, n_out + 1))
            if fidelity(corrected, target) > 1 - FEEDFORWARD_FID_TOL:
                corrections[branch] = word
                break
        else:
            raise ValueError(
                f"branch {branch}: no Pauli correction reaches the target "
                "(resource cannot realize this gate)"
            )
    return corrections


def target_two_qubit(instr: GateInstruction) -> PureState:
    """Circuit-model target (RZ(alpha) x RZ(beta)) CZ |++>."""
    state = named_state("plus").tensor(named_state("plus"))
    state = apply_gate(state, CZ, [1, 2])
    state = apply_gate(state, RZ(instr.alpha), [1])
    return apply_gate(state, RZ(instr.beta), [2])


def target_single(instr: GateInstruction) -> PureState:
    """Circuit-model target RX(beta) RZ(alpha) |+>."""
    state = apply_gate(named_state("plus"), RZ(instr.alpha), [1])
    return apply_gate(state, RX(instr.beta), [1])


def two_qubit_pattern(instr: GateInstruction) -> MeasurementPattern:
    """Measure qubits 2 and 3 of the cluster in the planar bases at the
    instruction angles; qubits 1 and 4 carry the two-qubit output."""
    steps = (
        (2, LocalBasis.planar_std(instr.alpha)),
        (3, LocalBasis.planar_std(instr.beta)),
    )
    outputs = (1, 4)
    target = target_two_qubit(instr)
    corrections = derive_feedforward(steps, outputs, cluster4(), target)
    return MeasurementPattern(4, steps, outputs, corrections, target)


def single_rotation_pattern(instr: GateInstruction) -> MeasurementPattern:
    """Disentangle qubit 4 with an X measurement, then measure qubits 1 and
    2 at the instruction angles; qubit 3 carries the rotated output."""
    steps = (
        (4, LocalBasis.x()),
        (1, LocalBasis.planar_had(instr.alpha)),
        (2, LocalBasis.planar_std(instr.beta)),
    )
    outputs = (3,)
    target = target_single(instr)
    corrections = derive_feedforward(steps, outputs, cluster4(), target)
    return MeasurementPattern(4, steps, outputs, corrections, target)


def execute(pattern: MeasurementPattern, resource: PureState, branch=None, seed=None):
    """Run the pattern on a pure resource state.

    `branch` fixes all outcome bits; when None they are drawn from the Born
    distribution using `seed`. Returns (corrected output state, outcome
    bitstring, branch probability).
    """
    if resource.n_qubits != pattern.resource_size:
        raise ValueError("resource size does not match pattern")
    if branch is None:
        rng = np.random.default_rng(seed)
        labels = list(range(1, resource.n_qubits + 1))
        state, prob, bits = resource, 1.0, []
        for qubit, basis in pattern.steps:
            pos = labels.index(qubit) + 1
            v0 = basis.vectors()[0]
            tensor = np.asarray(state.amplitudes).reshape((2,) * state.n_qubits)
            p0 = float(
                np.linalg.norm(np.tensordot(v0.conj(), tensor, axes=([0], [pos - 1]))) ** 2
            )
            bit = int(rng.random() >= p0)
            p, _, state = measure(state, pos, basis, select=bit)
            prob *= p
            labels.pop(pos - 1)
            bits.append(str(bit))
        outcomes = "".join(bits)
    else:
        outcomes = "".join(str(int(b)) for b in branch)
        state, prob = _run_steps(pattern.steps, resource, outcomes)
    word = pattern.corrections[outcomes]
    output = apply_gate(state, word, range(1, len(pattern.output_qubits) + 1))
    return output, outcomes, prob


def _projector_matrix(vec: np.ndarray, pos: int, n: int) -> np.ndarray:
    """The (2^{n-1} x 2^n) map removing qubit `pos` by projecting on <vec|."""
    left = np.eye(2 ** (pos - 1), dtype=complex)
    right = np.eye(2 ** (n - pos), dtype=complex)
    return np.kron(np.kron(left, vec.conj().reshape(1, 2)), right)


def execute_density(pattern: MeasurementPattern, resource: DensityMatrix, branch):
    """Density-matrix variant of `execute` for noisy resources; the branch
    must be explicit."""
    if resource.n_qubits != pattern.resource_size:
        raise ValueError("resource size does not match pattern")
    outcomes = "".join(str(int(b)) for b in branch)
    labels = list(range(1, resource.n_qubits + 1))
    rho = np.array(resource.entries)
    n = resource.n_qubits
    prob = 1.0
    for (qubit, basis), bit in zip(pattern.steps, outcomes):
        pos = labels.index(qubit) + 1
        vec = basis.vectors()[int(bit)]
        k = _projector_matrix(vec, pos, n)
        rho = k @ rho @ k.conj().T
        p = float(np.trace(rho).real)
        if p < 1e-12:
            raise ValueError(f"branch {outcomes} has probability ~0")
        rho /= p
        prob *= p
        labels.pop(pos - 1)
        n -= 1
    word = pattern.corrections[outcomes]
    op = PauliString(word).dense()
    rho = op @ rho @ op.conj().T
    return DensityMatrix(n, rho), outcomes, prob


def basis_reassignment_check(pattern: MeasurementPattern, resource: PureState) -> bool:
    """Check that applying the stored correction then measuring in Pauli
    bases is equivalent to measuring the uncorrected branch state in the
    correction-conjugated (reassigned) bases, for every branch."""
    n_out = len(pattern.output_qubits)
    if pattern.target is not None:
        reference = pattern.target
    else:
        out0, _, _ = execute(pattern, resource, branch="0" * len(pattern.steps))
        reference = out0
    for bits in itertools.product("01", repeat=len(pattern.steps)):
        branch = "".join(bits)
        state, _ = _run_steps(pattern.steps, resource, branch)
        correction = PauliString(pattern.corrections[branch]).dense()
        for letters in itertools.product("XYZ", repeat=n_out):
            basis_vectors = [LocalBasis(kind).vectors() for kind in letters]
            for outcome in itertools.product((0, 1), repeat=n_out):
                bra = np.array([1.0], dtype=complex)
                for (v0, v1), bit in zip(basis_vectors, outcome):
                    bra = np.kron(bra, (v0, v1)[bit])
                # original basis on the corrected reference state
                p_ref = abs(np.vdot(bra, reference.amplitudes)) ** 2
                # reassigned basis P^dagger |m> on the uncorrected branch
                rotated = correction.conj().T @ bra
                p_rot = abs(np.vdot(rotated, state.amplitudes)) ** 2
                if abs(p_ref - p_rot) > 1e-9:
                    return False
    return True


# Instruction sweeps matching the two reference tables of gate settings.
TWO_QUBIT_INSTRUCTIONS = tuple(
    GateInstruction(a, b)
    for a in (0.0, math.pi)
    for b in (0.0, math.pi / 2, math.pi, -math.pi / 2)
)
SINGLE_QUBIT_INSTRUCTIONS = (
    GateInstruction(0.0, 0.0),
    GateInstruction(math.pi, 0.0),
    GateInstruction(math.pi / 2, 0.0),
    GateInstruction(-math.pi / 2, 0.0),
    GateInstruction(math.pi / 2, math.pi / 2),
    GateInstruction(math.pi / 2, -math.pi / 2),
)
