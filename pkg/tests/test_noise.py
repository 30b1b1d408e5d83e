import numpy as np
import pytest

from clustersim.noise import NoiseSpec, apply_noise, fit_white_p
from clustersim.states import cluster4, fidelity, named_state, pauli_expectation
from clustersim.witness import build_b2, build_b4, witness_expectation


class TestNoiseSpec:
    def test_parse_white(self):
        spec = NoiseSpec.parse("white:0.86")
        assert spec == NoiseSpec("white", 0.86)

    def test_parse_dephase_with_qubits(self):
        spec = NoiseSpec.parse("dephase:0.05:1,2")
        assert spec.kind == "dephase"
        assert spec.p == 0.05
        assert spec.qubits == (1, 2)

    def test_parse_errors(self):
        for bad in ("white", "white:2.0", "purple:0.1", "dephase:0.1:1:2"):
            with pytest.raises(ValueError):
                NoiseSpec.parse(bad)


class TestWhiteNoise:
    def test_no_noise(self):
        rho = apply_noise(cluster4(), NoiseSpec("white", 1.0))
        assert fidelity(rho, cluster4()) == pytest.approx(1.0, abs=1e-12)

    def test_full_noise_is_maximally_mixed(self):
        rho = apply_noise(cluster4(), NoiseSpec("white", 0.0))
        assert fidelity(rho, cluster4()) == pytest.approx(1 / 16, abs=1e-12)
        assert np.allclose(rho.entries, np.eye(16) / 16)

    def test_witness_linearity_on_grid(self):
        b2, b4 = build_b2(), build_b4()
        for p in np.linspace(0, 1, 11):
            rho = apply_noise(cluster4(), NoiseSpec("white", float(p)))
            assert witness_expectation(rho, b4) == pytest.approx(p, abs=1e-12)
            assert witness_expectation(rho, b2) == pytest.approx((3 * p - 1) / 2, abs=1e-12)

    def test_fidelity_formula(self):
        for p in (0.0, 0.25, 0.86, 1.0):
            rho = apply_noise(cluster4(), NoiseSpec("white", p))
            assert fidelity(rho, cluster4()) == pytest.approx(p + (1 - p) / 16, abs=1e-12)

    def test_output_is_valid_density_matrix(self):
        # DensityMatrix construction enforces Hermiticity, trace, positivity
        for p in (0.0, 0.5, 1.0):
            rho = apply_noise(cluster4(), NoiseSpec("white", p))
            assert rho.n_qubits == 4


class TestDephasing:
    def test_zero_probability_is_identity(self):
        rho = apply_noise(cluster4(), NoiseSpec("dephase", 0.0))
        assert fidelity(rho, cluster4()) == pytest.approx(1.0, abs=1e-12)

    def test_single_qubit_coherence_decay(self):
        # dephasing |+> with probability p scales <X> by 1 - 2p
        for p in (0.1, 0.3, 0.5):
            rho = apply_noise(named_state("plus"), NoiseSpec("dephase", p, (1,)))
            assert pauli_expectation(rho, "X") == pytest.approx(1 - 2 * p, abs=1e-12)

    def test_only_listed_qubits_affected(self):
        rho = apply_noise(cluster4(), NoiseSpec("dephase", 0.5, (1,)))
        # ZZII commutes with Z dephasing on qubit 1
        assert pauli_expectation(rho, "ZZII") == pytest.approx(1.0, abs=1e-12)

    def test_bad_qubit_label(self):
        with pytest.raises(ValueError):
            apply_noise(cluster4(), NoiseSpec("dephase", 0.1, (7,)))


class TestFitWhiteP:
    def test_anchor(self):
        assert fit_white_p(0.860) == 0.860

    def test_endpoints(self):
        assert fit_white_p(0.0) == 0.0
        assert fit_white_p(1.0) == 1.0

    def test_round_trip(self):
        for value in (0.2, 0.66, 0.95):
            p = fit_white_p(value)
            rho = apply_noise(cluster4(), NoiseSpec("white", p))
            assert witness_expectation(rho, build_b4()) == pytest.approx(value, abs=1e-12)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            fit_white_p(1.5)

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            NoiseSpec("white", -0.1)
