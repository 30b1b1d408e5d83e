"""Fidelity-bound observables for the four-qubit cluster state.

Two few-setting observables give lower bounds on the cluster-state
fidelity: a six-term one needing two measurement settings and an
eight-term one needing four settings; both are dominated by the
cluster projector, so their expectations never exceed the fidelity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix, PauliString, PureState, pauli_expectation


@dataclass(frozen=True)
class ObservableSum:
    """Weighted sum of Pauli strings plus a multiple of the identity."""

    terms: tuple[PauliString, ...]
    identity_offset: float = 0.0

    def __post_init__(self):
        terms = tuple(self.terms)
        if terms:
            length = len(terms[0].word)
            if any(len(t.word) != length for t in terms):
                raise ValueError("all Pauli words must have equal length")
        object.__setattr__(self, "terms", terms)

    @property
    def n_qubits(self) -> int:
        return len(self.terms[0].word)

    def dense(self) -> np.ndarray:
        dim = 2**self.n_qubits
        op = self.identity_offset * np.eye(dim, dtype=complex)
        for term in self.terms:
            op += term.dense()
        return op

    def to_json(self) -> str:
        return json.dumps(
            {
                "terms": [{"word": t.word, "coeff": t.coefficient} for t in self.terms],
                "offset": self.identity_offset,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ObservableSum":
        obj = json.loads(text)
        terms = tuple(PauliString(t["word"], t["coeff"]) for t in obj["terms"])
        return cls(terms, obj["offset"])


@dataclass(frozen=True)
class TomographicSetting:
    """One local Pauli basis per qubit, e.g. 'XXZZ'."""

    bases: str

    def __post_init__(self):
        if not self.bases or any(c not in "XYZ" for c in self.bases):
            raise ValueError(f"invalid setting {self.bases!r}")

    def covers(self, word: str) -> bool:
        """True if `word` is obtained from this setting by replacing letters with I."""
        return len(word) == len(self.bases) and all(
            w == "I" or w == b for w, b in zip(word, self.bases)
        )


def build_b2() -> ObservableSum:
    """Two-setting bound observable: six words at 1/4 minus half the identity."""
    words = ("ZZII", "IZXX", "ZIXX", "XXZI", "IIZZ", "XXIZ")
    return ObservableSum(tuple(PauliString(w, 0.25) for w in words), identity_offset=-0.5)


def build_b4() -> ObservableSum:
    """Four-setting bound observable: four X-words at +1/8 and four Y-words at -1/8."""
    plus = ("XXZI", "IZXX", "ZIXX", "XXIZ")
    minus = ("YYZI", "IZYY", "ZIYY", "YYIZ")
    terms = tuple(PauliString(w, 0.125) for w in plus) + tuple(
        PauliString(w, -0.125) for w in minus
    )
    return ObservableSum(terms, identity_offset=0.0)


def witness_expectation(state, b: ObservableSum) -> float:
    """Sum of term expectations plus the identity offset."""
    return sum(pauli_expectation(state, t) for t in b.terms) + b.identity_offset


def verify_dominance(b: ObservableSum, target: PureState) -> float:
    """Smallest eigenvalue of |target><target| - B (nonnegative iff B is a
    valid fidelity lower bound)."""
    proj = np.outer(target.amplitudes, target.amplitudes.conj())
    return float(np.linalg.eigvalsh(proj - b.dense())[0])


def _join(a: str, b: str) -> str | None:
    """Merge two words letter-wise if compatible (equal or one is I)."""
    out = []
    for x, y in zip(a, b):
        if x == "I":
            out.append(y)
        elif y == "I" or x == y:
            out.append(x)
        else:
            return None
    return "".join(out)


def required_settings(b: ObservableSum) -> list[TomographicSetting]:
    """A minimal list of settings covering every term of the observable.

    Terms are greedily merged in order into compatible groups; leftover
    identity slots are completed with Z for a deterministic result.
    """
    groups: list[str] = []
    for term in b.terms:
        for i, g in enumerate(groups):
            merged = _join(g, term.word)
            if merged is not None:
                groups[i] = merged
                break
        else:
            groups.append(term.word)
    settings = []
    seen = set()
    for g in groups:
        completed = g.replace("I", "Z")
        if completed not in seen:
            seen.add(completed)
            settings.append(TomographicSetting(completed))
    return settings
