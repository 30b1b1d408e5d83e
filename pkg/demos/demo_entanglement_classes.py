"""Discriminating entanglement classes by Schmidt-rank signature.

The triple of Schmidt ranks over the three two-two partitions is
invariant under local operations, and the fidelity to the cluster state
of any state with low rank in cut 13 or 14 is capped: 1/2 for rank <= 2
and 3/4 for rank <= 3. A measured fidelity above those caps excludes the
GHZ/W and Dicke classes respectively.
"""

from clustersim import (
    classify_by_fidelity,
    cluster4,
    fidelity_ceiling,
    named_state,
    rank_signature,
)

print("Rank signatures (r12, r13, r14):")
for name, state in [
    ("cluster", cluster4()),
    ("GHZ", named_state("ghz4")),
    ("W", named_state("w4")),
    ("Dicke", named_state("dicke4")),
]:
    print(f"  {name:8s} {tuple(rank_signature(state))}")

print("\nFidelity ceilings for rank-limited states in cut 13:")
for k in (1, 2, 3, 4):
    print(f"  rank <= {k}: {fidelity_ceiling(cluster4(), {1, 3}, k):.4f}")

print("\nWhat a measured fidelity excludes:")
for f in (0.40, 0.60, 0.860):
    print(f"  F = {f:.3f}: {classify_by_fidelity(f) or ['nothing']}")
