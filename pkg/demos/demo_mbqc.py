"""One-way quantum computing on the cluster resource.

Both gate patterns are driven entirely by single-qubit measurements;
outcome-conditioned Pauli corrections make every branch collapse to the
same circuit-model output. On a noisy resource the output fidelity
degrades smoothly.
"""

from clustersim import (
    NoiseSpec,
    SINGLE_QUBIT_INSTRUCTIONS,
    TWO_QUBIT_INSTRUCTIONS,
    apply_noise,
    cluster4,
    execute,
    execute_density,
    fidelity,
    single_rotation_pattern,
    target_single,
    target_two_qubit,
    two_qubit_pattern,
)

print("Two-qubit gate: (RZ(a) x RZ(b)) CZ |++>, branch fidelities to target")
for instr in TWO_QUBIT_INSTRUCTIONS:
    pattern = two_qubit_pattern(instr)
    target = target_two_qubit(instr)
    fids = [
        fidelity(execute(pattern, cluster4(), branch=format(i, "02b"))[0], target)
        for i in range(4)
    ]
    print(f"  a={instr.alpha:+.3f} b={instr.beta:+.3f}  min branch fidelity {min(fids):.12f}")

print("\nSingle-qubit rotation: RX(b) RZ(a) |+>, 8 branches each")
for instr in SINGLE_QUBIT_INSTRUCTIONS:
    pattern = single_rotation_pattern(instr)
    target = target_single(instr)
    fids = [
        fidelity(execute(pattern, cluster4(), branch=format(i, "03b"))[0], target)
        for i in range(8)
    ]
    print(f"  a={instr.alpha:+.3f} b={instr.beta:+.3f}  min branch fidelity {min(fids):.12f}")

print("\nOutput fidelity under a white-noise resource (two-qubit gate, a=b=0):")
instr = TWO_QUBIT_INSTRUCTIONS[0]
pattern = two_qubit_pattern(instr)
for p in (1.0, 0.95, 0.86, 0.7):
    rho = apply_noise(cluster4(), NoiseSpec("white", p))
    out, _, _ = execute_density(pattern, rho, "00")
    print(f"  p = {p:.2f}: output fidelity {fidelity(out, pattern.target):.4f}")
