"""Fidelity lower bounds from few measurement settings.

The cluster-state projector dominates two cheap observables: one built
from two tomographic settings and one from four. Their expectation values
therefore never exceed the true fidelity, which lets an experiment bound
the fidelity without full tomography.
"""

from clustersim import (
    DensityMatrix,
    NoiseSpec,
    apply_noise,
    build_b2,
    build_b4,
    cluster4,
    required_settings,
    verify_dominance,
    witness_expectation,
)

b2, b4 = build_b2(), build_b4()
c4 = cluster4()

print("Dominance check (min eigenvalue of projector - observable):")
print(f"  two-setting observable : {verify_dominance(b2, c4):+.2e}")
print(f"  four-setting observable: {verify_dominance(b4, c4):+.2e}")

print("\nMeasurement settings required:")
print(f"  two-setting : {[s.bases for s in required_settings(b2)]}")
print(f"  four-setting: {[s.bases for s in required_settings(b4)]}")

print("\nExpectation values (= fidelity lower bounds):")
for label, state in [
    ("ideal cluster", c4),
    ("maximally mixed", DensityMatrix.maximally_mixed(4)),
    ("white noise p=0.86", apply_noise(c4, NoiseSpec("white", 0.86))),
]:
    v2 = witness_expectation(state, b2)
    v4 = witness_expectation(state, b4)
    print(f"  {label:20s} two-setting {v2:+.4f}   four-setting {v4:+.4f}")

print("\nThe p=0.86 row reproduces the measured pair 0.791 +/- 0.030 and")
print("0.860 +/- 0.015: the four-setting bound is strictly tighter.")
