import itertools
import math

import numpy as np
import pytest

from clustersim.mbqc import (
    SINGLE_QUBIT_INSTRUCTIONS,
    TWO_QUBIT_INSTRUCTIONS,
    GateInstruction,
    MeasurementPattern,
    basis_reassignment_check,
    derive_feedforward,
    execute,
    execute_density,
    single_rotation_pattern,
    target_single,
    target_two_qubit,
    two_qubit_pattern,
)
from clustersim.noise import NoiseSpec, apply_noise
from clustersim.states import PureState, cluster4, fidelity, named_state
from conftest import ket

S2 = 1 / math.sqrt(2)
H, V = [1, 0], [0, 1]
PLUS, MINUS = [S2, S2], [S2, -S2]
R, L = [S2, 1j * S2], [S2, -1j * S2]

PI = math.pi

# the eight two-qubit gate settings and their listed output kets
TWO_QUBIT_TABLE = [
    ((0, 0), ket(H, PLUS) + ket(V, MINUS)),
    ((0, PI / 2), ket(H, R) + ket(V, L)),
    ((0, PI), ket(H, MINUS) + ket(V, PLUS)),
    ((0, -PI / 2), ket(H, L) + ket(V, R)),
    ((PI, 0), ket(H, PLUS) - ket(V, MINUS)),
    ((PI, PI / 2), ket(H, R) - ket(V, L)),
    ((PI, PI), ket(H, MINUS) - ket(V, PLUS)),
    ((PI, -PI / 2), ket(H, L) - ket(V, R)),
]

# the six single-qubit rotation settings and their listed output kets
SINGLE_TABLE = [
    ((0, 0), ket(PLUS)),
    ((PI, 0), ket(MINUS)),
    ((PI / 2, 0), ket(R)),
    ((-PI / 2, 0), ket(L)),
    ((PI / 2, PI / 2), ket(H)),
    ((PI / 2, -PI / 2), ket(V)),
]


class TestTargets:
    @pytest.mark.parametrize("angles,expected", TWO_QUBIT_TABLE)
    def test_two_qubit_targets_match_table(self, angles, expected):
        target = target_two_qubit(GateInstruction(*angles))
        assert fidelity(target, PureState.from_amplitudes(expected)) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("angles,expected", SINGLE_TABLE)
    def test_single_targets_match_table(self, angles, expected):
        target = target_single(GateInstruction(*angles))
        assert fidelity(target, PureState.from_amplitudes(expected)) == pytest.approx(1.0, abs=1e-12)

    def test_cz_on_plus_plus_is_psi1(self):
        target = target_two_qubit(GateInstruction(0, 0))
        expected = (ket(H, PLUS) + ket(V, MINUS)) / math.sqrt(2)
        assert np.allclose(np.abs(np.vdot(expected, target.amplitudes)) ** 2, 1.0)


class TestTwoQubitPattern:
    @pytest.mark.parametrize("angles,expected", TWO_QUBIT_TABLE)
    def test_all_branches_deterministic(self, angles, expected):
        pattern = two_qubit_pattern(GateInstruction(*angles))
        listed = PureState.from_amplitudes(expected)
        for i in range(4):
            out, outcomes, prob = execute(pattern, cluster4(), branch=format(i, "02b"))
            assert fidelity(out, listed) >= 1 - 1e-9
            assert prob == pytest.approx(0.25, abs=1e-12)

    def test_branch_probabilities_sum_to_one(self):
        pattern = two_qubit_pattern(GateInstruction(0.3, 1.1))
        total = sum(
            execute(pattern, cluster4(), branch=format(i, "02b"))[2] for i in range(4)
        )
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_trivial_branch_needs_no_correction(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        assert pattern.corrections["00"] == "II"

    def test_seeded_execution_reproducible(self):
        pattern = two_qubit_pattern(GateInstruction(0, PI / 2))
        runs = [execute(pattern, cluster4(), seed=7) for _ in range(3)]
        assert len({r[1] for r in runs}) == 1
        for out, _, _ in runs:
            assert fidelity(out, pattern.target) >= 1 - 1e-9


class TestSingleRotationPattern:
    @pytest.mark.parametrize("angles,expected", SINGLE_TABLE)
    def test_all_branches_deterministic(self, angles, expected):
        pattern = single_rotation_pattern(GateInstruction(*angles))
        listed = PureState.from_amplitudes(expected)
        for i in range(8):
            out, _, _ = execute(pattern, cluster4(), branch=format(i, "03b"))
            assert fidelity(out, listed) >= 1 - 1e-9

    def test_branch_probabilities_sum_to_one(self):
        pattern = single_rotation_pattern(GateInstruction(PI / 2, PI / 2))
        total = sum(
            execute(pattern, cluster4(), branch=format(i, "03b"))[2] for i in range(8)
        )
        assert total == pytest.approx(1.0, abs=1e-12)


class TestDeriveFeedforward:
    def test_product_resource_rejected(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        product = PureState.from_amplitudes(ket(H, H, H, H))
        with pytest.raises(ValueError):
            derive_feedforward(
                pattern.steps, pattern.output_qubits, product, target_two_qubit(GateInstruction(0, 0))
            )

    def test_every_branch_has_a_word(self):
        for instr in TWO_QUBIT_INSTRUCTIONS:
            pattern = two_qubit_pattern(instr)
            assert set(pattern.corrections) == {"00", "01", "10", "11"}
            assert all(set(w) <= set("IXYZ") for w in pattern.corrections.values())


class TestNoisyExecution:
    def test_noisy_resource_degrades_output(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        rho = apply_noise(cluster4(), NoiseSpec("white", 0.86))
        out, _, _ = execute_density(pattern, rho, "00")
        f = fidelity(out, pattern.target)
        assert 0.8 < f < 1.0

    def test_monotone_degradation(self):
        pattern = single_rotation_pattern(GateInstruction(PI / 2, 0))
        fids = []
        for p in (0.2, 0.5, 0.8, 1.0):
            rho = apply_noise(cluster4(), NoiseSpec("white", p))
            out, _, _ = execute_density(pattern, rho, "000")
            fids.append(fidelity(out, pattern.target))
        assert all(a <= b + 1e-12 for a, b in zip(fids, fids[1:]))

    def test_pure_resource_matches_pure_path(self):
        pattern = two_qubit_pattern(GateInstruction(0, PI))
        rho = cluster4().to_density()
        for i in range(4):
            branch = format(i, "02b")
            out_d, _, prob_d = execute_density(pattern, rho, branch)
            out_p, _, prob_p = execute(pattern, cluster4(), branch=branch)
            assert prob_d == pytest.approx(prob_p, abs=1e-12)
            assert fidelity(out_d, out_p) == pytest.approx(1.0, abs=1e-10)


class TestBasisReassignment:
    def test_two_qubit_pattern(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        assert basis_reassignment_check(pattern, cluster4())

    def test_single_rotation_pattern(self):
        pattern = single_rotation_pattern(GateInstruction(PI / 2, PI / 2))
        assert basis_reassignment_check(pattern, cluster4())

    def test_corrupted_corrections_detected(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        corrupted = dict(pattern.corrections)
        corrupted["01"] = "XX" if corrupted["01"] != "XX" else "YY"
        bad = MeasurementPattern(
            pattern.resource_size, pattern.steps, pattern.output_qubits, corrupted, pattern.target
        )
        assert not basis_reassignment_check(bad, cluster4())


class TestPatternValidation:
    def test_overlapping_outputs_rejected(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        with pytest.raises(ValueError):
            MeasurementPattern(4, pattern.steps, (2, 4), pattern.corrections)

    def test_incomplete_corrections_rejected(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        partial = {"00": "II"}
        with pytest.raises(ValueError):
            MeasurementPattern(4, pattern.steps, pattern.output_qubits, partial)

    def test_resource_size_mismatch(self):
        pattern = two_qubit_pattern(GateInstruction(0, 0))
        with pytest.raises(ValueError):
            execute(pattern, named_state("plus"), branch="00")

    def test_instruction_sweeps_cover_tables(self):
        assert len(TWO_QUBIT_INSTRUCTIONS) == 8
        assert len(SINGLE_QUBIT_INSTRUCTIONS) == 6
        assert [(i.alpha, i.beta) for i in TWO_QUBIT_INSTRUCTIONS] == [a for a, _ in TWO_QUBIT_TABLE]
        assert [(i.alpha, i.beta) for i in SINGLE_QUBIT_INSTRUCTIONS] == [a for a, _ in SINGLE_TABLE]
