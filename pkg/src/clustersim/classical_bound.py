"""Optimal average fidelity achievable with limited classical communication
and no entanglement.

With c bits of communication the preparer can only group the instruction
targets into at most 2^c blocks and send the block label; the receiver
then prepares the best fixed state per block. The optimum over all such
groupings is found by exhaustive enumeration of set partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .states import PureState

MAX_TARGETS = 12  # S(12, <=4) partitions still enumerate in well under a second


@dataclass(frozen=True)
class GroupingStrategy:
    """One grouping of target indices with its optimal per-block states."""

    groups: tuple  # tuple of tuples of 0-based target indices
    prepared_states: tuple  # one PureState per group
    average_fidelity: float


def enumerate_partitions(n: int, max_blocks: int):
    """Yield every set partition of {0..n-1} with at most `max_blocks` blocks,
    in restricted-growth-string lexicographic order."""
    if not 1 <= max_blocks <= n:
        raise ValueError("need 1 <= max_blocks <= n")
    if n > MAX_TARGETS:
        raise ValueError(f"n must be at most {MAX_TARGETS}")

    rgs = [0] * n

    def emit():
        k = max(rgs) + 1
        blocks = [[] for _ in range(k)]
        for i, b in enumerate(rgs):
            blocks[b].append(i)
        return tuple(tuple(b) for b in blocks)

    def recurse(i: int, current_max: int):
        if i == n:
            yield emit()
            return
        for b in range(min(current_max + 1, max_blocks - 1) + 1):
            rgs[i] = b
            yield from recurse(i + 1, max(current_max, b))

    yield from recurse(1, 0)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, by the standard recurrence."""

    @lru_cache(maxsize=None)
    def s(n, k):
        if k == 0:
            return 1 if n == 0 else 0
        if k > n:
            return 0
        return k * s(n - 1, k) + s(n - 1, k - 1)

    return s(n, k)


def optimal_group_state(states: list[PureState]):
    """Best single state for a group of targets: the top eigenvector of the
    mean projector. Returns (state, mean fidelity = top eigenvalue)."""
    if not states:
        raise ValueError("group must be nonempty")
    dim = states[0].amplitudes.size
    if any(s.amplitudes.size != dim for s in states):
        raise ValueError("states must have equal dimension")
    mean_proj = sum(
        np.outer(s.amplitudes, s.amplitudes.conj()) for s in states
    ) / len(states)
    vals, vecs = np.linalg.eigh(mean_proj)
    return PureState.from_amplitudes(vecs[:, -1]), float(vals[-1])


def classical_bound(targets: list[PureState], bits: int):
    """Maximize average fidelity over all groupings into at most 2^bits
    blocks. Returns (optimal value, one argmax GroupingStrategy); ties break
    toward the earlier partition in enumeration order."""
    if bits < 0:
        raise ValueError("bits must be nonnegative")
    n = len(targets)
    if n == 0:
        raise ValueError("need at least one target")
    if n > MAX_TARGETS:
        raise ValueError(f"at most {MAX_TARGETS} targets supported")
    max_blocks = min(2**bits, n)

    projectors = [np.outer(s.amplitudes, s.amplitudes.conj()) for s in targets]
    cache: dict[tuple, float] = {}

    def block_value(block: tuple) -> float:
        if block not in cache:
            summed = sum(projectors[i] for i in block)
            cache[block] = float(np.linalg.eigvalsh(summed)[-1])
        return cache[block]

    best_value = -1.0
    best_partition = None
    for partition in enumerate_partitions(n, max_blocks):
        value = sum(block_value(b) for b in partition) / n
        if value > best_value + 1e-15:
            best_value = value
            best_partition = partition

    prepared = tuple(
        optimal_group_state([targets[i] for i in block])[0] for block in best_partition
    )
    strategy = GroupingStrategy(best_partition, prepared, best_value)
    return best_value, strategy


def margin_report(measured_mean: float, measured_err: float, bound: float) -> float:
    """Signed distance of a measured average fidelity above the classical
    bound, in units of the quoted standard deviation."""
    if measured_err <= 0:
        raise ValueError("measurement error must be positive")
    return (measured_mean - bound) / measured_err
