"""Coincidence-count records per tomographic setting: synthesis, ingestion,
outcome probabilities, Pauli expectations, and witness bounds with
Poissonian error bars.

Outcome labels per local basis: Z -> H/V, X -> +/-, Y -> R/L, with the
first label (bit 0) being the +1 eigenvector of the corresponding Pauli
operator. Outcomes are indexed with qubit 1 as the most significant bit.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix, PureState
from .witness import ObservableSum, TomographicSetting, required_settings

# Rows are the bras of outcome 0 and outcome 1 for each setting letter.
_SQ2 = 1 / math.sqrt(2)
_BASIS_ROWS = {
    "Z": np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    "X": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    # bras of |R> = (|H> + i|V>)/sqrt2 and |L> = (|H> - i|V>)/sqrt2
    "Y": np.array([[_SQ2, -1j * _SQ2], [_SQ2, 1j * _SQ2]], dtype=complex),
}

_OUTCOME_LETTERS = {"Z": "HV", "X": "+-", "Y": "RL"}


@dataclass(frozen=True)
class CountRecord:
    """Coincidence counts for one tomographic setting, one per outcome."""

    setting: TomographicSetting
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.shape != (2 ** len(self.setting.bases),):
            raise ValueError("counts length must be 2^n for the setting")
        if np.any(counts < 0):
            raise ValueError("counts must be nonnegative")
        counts = counts.copy()
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def outcome_string(setting: TomographicSetting, index: int) -> str:
    """Label like '++HH' for an outcome index under the given setting."""
    n = len(setting.bases)
    return "".join(
        _OUTCOME_LETTERS[b][(index >> (n - 1 - i)) & 1] for i, b in enumerate(setting.bases)
    )


def outcome_index(setting: TomographicSetting, label: str) -> int:
    """Inverse of `outcome_string`."""
    if len(label) != len(setting.bases):
        raise ValueError(f"outcome {label!r} has wrong length")
    idx = 0
    for b, c in zip(setting.bases, label):
        letters = _OUTCOME_LETTERS[b]
        if c not in letters:
            raise ValueError(f"outcome letter {c!r} invalid for basis {b}")
        idx = (idx << 1) | letters.index(c)
    return idx


def born_distribution(state, setting: TomographicSetting) -> np.ndarray:
    """Exact outcome probabilities for measuring every qubit in its setting
    basis."""
    u = np.array([[1.0]], dtype=complex)
    for b in setting.bases:
        u = np.kron(u, _BASIS_ROWS[b])
    if isinstance(state, PureState):
        probs = np.abs(u @ state.amplitudes) ** 2
    elif isinstance(state, DensityMatrix):
        probs = np.real(np.einsum("ij,jk,ik->i", u, state.entries, u.conj()))
    else:
        raise TypeError(f"unsupported state type {type(state)}")
    if probs.size != 2 ** len(setting.bases):
        raise ValueError("setting length does not match state")
    probs = np.clip(probs, 0.0, None)
    return probs / probs.sum()


def sample_counts(state, setting: TomographicSetting, total: int, seed: int) -> CountRecord:
    """Multinomial draw of `total` coincidence events from the Born
    distribution; deterministic given the seed."""
    if total < 1:
        raise ValueError("total must be at least 1")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(total, born_distribution(state, setting))
    return CountRecord(setting, counts)


def exact_record(state, setting: TomographicSetting, total: int = 10**9) -> CountRecord:
    """Infinite-statistics stand-in: counts proportional to exact Born
    probabilities (rounded)."""
    probs = born_distribution(state, setting)
    return CountRecord(setting, np.rint(probs * total).astype(np.int64))


def probabilities(rec: CountRecord) -> np.ndarray:
    """Counts normalized by the total number of events."""
    if rec.total == 0:
        raise ValueError("record has zero total counts")
    return rec.counts / rec.total


def expectation_from_counts(rec: CountRecord, word) -> tuple[float, float]:
    """Pauli expectation and its Poissonian standard error from counts.

    The word must be obtained from the record's setting by replacing
    letters with I; each outcome contributes the product of its +/-1
    eigenvalues over the word's non-identity positions.
    """
    word_str = getattr(word, "word", word)
    if not rec.setting.covers(word_str):
        raise ValueError(f"word {word_str!r} incompatible with setting {rec.setting.bases}")
    if rec.total == 0:
        raise ValueError("record has zero total counts")
    n = len(word_str)
    signs = np.ones(2**n)
    for i, letter in enumerate(word_str):
        if letter != "I":
            bits = (np.arange(2**n) >> (n - 1 - i)) & 1
            signs *= 1.0 - 2.0 * bits
    total = rec.total
    value = float(np.dot(signs, rec.counts)) / total
    sigma = math.sqrt(float(np.dot(rec.counts, (signs - value) ** 2))) / total
    return value, sigma


def _aggregate(records: list[CountRecord]) -> list[CountRecord]:
    """Sum records sharing a setting, keeping first-appearance order."""
    merged: dict[str, np.ndarray] = {}
    order: list[TomographicSetting] = []
    for rec in records:
        key = rec.setting.bases
        if key in merged:
            merged[key] = merged[key] + rec.counts
        else:
            merged[key] = np.array(rec.counts)
            order.append(rec.setting)
    return [CountRecord(s, merged[s.bases]) for s in order]


def witness_from_counts(records: list[CountRecord], b: ObservableSum) -> tuple[float, float]:
    """Fidelity lower bound and its error from measured counts.

    Each term is evaluated against the first compatible record; the error
    is the quadrature sum of the per-term propagated sigmas.
    """
    records = _aggregate(records)
    bound = b.identity_offset
    variance = 0.0
    for term in b.terms:
        for rec in records:
            if rec.setting.covers(term.word):
                value, sigma = expectation_from_counts(rec, term.word)
                bound += term.coefficient * value
                variance += (term.coefficient * sigma) ** 2
                break
        else:
            needed = [s.bases for s in required_settings(b)]
            raise ValueError(
                f"no record covers term {term.word!r}; settings needed: {needed}"
            )
    return bound, math.sqrt(variance)


CSV_HEADER = ["setting", "outcome", "count"]


def parse_counts(text: str) -> list[CountRecord]:
    """Parse CSV with header `setting,outcome,count`; rows sharing a setting
    are grouped (first-appearance order) and missing outcomes default to 0."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows or [c.strip() for c in rows[0]] != CSV_HEADER:
        raise ValueError("expected header 'setting,outcome,count'")
    accum: dict[str, np.ndarray] = {}
    order: list[TomographicSetting] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 3:
            raise ValueError(f"line {lineno}: expected 3 fields")
        setting_str, outcome, count_str = (c.strip() for c in row)
        setting = TomographicSetting(setting_str)
        try:
            count = int(count_str)
        except ValueError:
            raise ValueError(f"line {lineno}: count {count_str!r} is not an integer")
        if count < 0:
            raise ValueError(f"line {lineno}: negative count")
        idx = outcome_index(setting, outcome)
        if setting_str not in accum:
            accum[setting_str] = np.zeros(2 ** len(setting_str), dtype=np.int64)
            order.append(setting)
        accum[setting_str][idx] += count
    return [CountRecord(s, accum[s.bases]) for s in order]


def serialize_counts(records: list[CountRecord]) -> str:
    """Inverse of `parse_counts`; emits every outcome row in index order."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        for idx in range(rec.counts.size):
            writer.writerow([rec.setting.bases, outcome_string(rec.setting, idx), int(rec.counts[idx])])
    return out.getvalue()
