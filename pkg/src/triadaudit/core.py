"""Triads, reciprocal matrices and the elementary ratio-preserving transforms.

A triad is a 3x3 positive reciprocal matrix, stored as its three
above-diagonal entries (t12, t13, t23).  The lower triangle is implied by
reciprocity, so the reciprocal invariant is structural and never needs
revalidation.  Everything here is an immutable value; all operations are
pure functions and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "CONSISTENCY_TOL",
    "RECIPROCITY_TOL",
    "DomainError",
    "Triad",
    "ReciprocalMatrix",
    "ReductionStep",
    "CanonicalForm",
    "make_triad",
    "triad_from_weights",
    "consistency_ratio",
    "is_consistent",
    "canonicalize",
    "replay_reduction",
    "apply_permutation",
    "permute_triad",
    "transpose_triad",
    "power_transform",
    "single_entry_perturb",
    "scale_transform",
]

# Relative band used to decide "consistent" in floating point.
CONSISTENCY_TOL = 1e-9
# Validation band for hand-entered matrices: |a_ij * a_ji - 1| <= tol.
RECIPROCITY_TOL = 1e-6


class DomainError(ValueError):
    """Raised when an input violates a documented precondition."""


def _require_positive_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a finite positive real, got {value!r}")
    return value


@dataclass(frozen=True)
class Triad:
    """The three above-diagonal entries of a 3x3 reciprocal matrix."""

    t12: float
    t13: float
    t23: float

    def __post_init__(self):
        for name in ("t12", "t13", "t23"):
            object.__setattr__(self, name, _require_positive_finite(name, getattr(self, name)))

    def entries(self) -> tuple[float, float, float]:
        return (self.t12, self.t13, self.t23)

    def entry(self, position: str) -> float:
        try:
            return {"12": self.t12, "13": self.t13, "23": self.t23}[str(position)]
        except KeyError:
            raise DomainError(f"position must be one of '12', '13', '23', got {position!r}") from None

    def matrix_rows(self) -> tuple[tuple[float, float, float], ...]:
        """Materialise the full 3x3 matrix, reciprocals computed on demand."""
        return (
            (1.0, self.t12, self.t13),
            (1.0 / self.t12, 1.0, self.t23),
            (1.0 / self.t13, 1.0 / self.t23, 1.0),
        )

    def to_matrix(self) -> "ReciprocalMatrix":
        return ReciprocalMatrix(self.matrix_rows())

    def as_dict(self) -> dict[str, float]:
        return {"t12": self.t12, "t13": self.t13, "t23": self.t23}


def make_triad(t12: float, t13: float, t23: float) -> Triad:
    """Build a triad from its above-diagonal ratios; rejects non-positive entries."""
    return Triad(t12, t13, t23)


def triad_from_weights(w1: float, w2: float, w3: float) -> Triad:
    """Consistent triad of the weight vector (w1, w2, w3): (w1/w2, w1/w3, w2/w3)."""
    w1 = _require_positive_finite("w1", w1)
    w2 = _require_positive_finite("w2", w2)
    w3 = _require_positive_finite("w3", w3)
    return Triad(w1 / w2, w1 / w3, w2 / w3)


def consistency_ratio(t: Triad) -> float:
    """x = t13 / (t12 * t23); equals 1 exactly when the triad is consistent."""
    return t.t13 / (t.t12 * t.t23)


def is_consistent(t: Triad, tol: float = CONSISTENCY_TOL) -> bool:
    x = consistency_ratio(t)
    return abs(x - 1.0) <= tol * max(1.0, x)


@dataclass(frozen=True)
class ReciprocalMatrix:
    """General n x n positive reciprocal matrix (unit diagonal, a_ji = 1/a_ij)."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n < 2 or any(len(row) != n for row in rows):
            raise DomainError(f"matrix must be square of order >= 2, got {n} rows")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not math.isfinite(v) or v <= 0.0:
                    raise DomainError(f"entry ({i + 1},{j + 1}) must be a finite positive real, got {v!r}")
        for i in range(n):
            if abs(rows[i][i] - 1.0) > RECIPROCITY_TOL:
                raise DomainError(f"diagonal entry ({i + 1},{i + 1}) must be 1, got {rows[i][i]!r}")
            for j in range(i + 1, n):
                if abs(rows[i][j] * rows[j][i] - 1.0) > RECIPROCITY_TOL:
                    raise DomainError(
                        f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not reciprocal: "
                        f"{rows[i][j]!r} * {rows[j][i]!r} != 1"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], complete_lower: bool = False) -> "ReciprocalMatrix":
        """Validate `rows` as a reciprocal matrix.

        With ``complete_lower`` the diagonal and the sub-diagonal cells of the
        input are ignored and rebuilt from the strict upper triangle, which
        tolerates hand-entered files that round reciprocals (or leave them 0).
        """
        data = [list(map(float, row)) for row in rows]
        n = len(data)
        if n < 2 or any(len(row) != n for row in data):
            raise DomainError(f"matrix must be square of order >= 2, got {n} rows")
        if complete_lower:
            for i in range(n):
                data[i][i] = 1.0
                for j in range(i + 1, n):
                    v = data[i][j]
                    if not math.isfinite(v) or v <= 0.0:
                        raise DomainError(f"entry ({i + 1},{j + 1}) must be a finite positive real, got {v!r}")
                    data[j][i] = 1.0 / v
        return cls(tuple(tuple(row) for row in data))

    @property
    def n(self) -> int:
        return len(self.entries)

    def triad(self) -> Triad:
        if self.n != 3:
            raise DomainError(f"triads only: matrix has order {self.n}, expected 3")
        return Triad(self.entries[0][1], self.entries[0][2], self.entries[1][2])


def _validate_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(int(v) for v in perm)
    if sorted(p) != list(range(n)):
        raise DomainError(f"perm must be a bijection on 0..{n - 1}, got {perm!r}")
    return p


def apply_permutation(m: ReciprocalMatrix, perm: Sequence[int]) -> ReciprocalMatrix:
    """Relabel alternatives: entry (i,j) of the result is a[inv(i)][inv(j)].

    ``perm[i]`` is the new position of alternative i (0-based).
    """
    p = _validate_permutation(perm, m.n)
    inv = [0] * m.n
    for old, new in enumerate(p):
        inv[new] = old
    rows = tuple(tuple(m.entries[inv[i]][inv[j]] for j in range(m.n)) for i in range(m.n))
    return ReciprocalMatrix(rows)


def permute_triad(t: Triad, perm: Sequence[int]) -> Triad:
    """Triad view of apply_permutation for n = 3."""
    p = _validate_permutation(perm, 3)
    inv = [0, 0, 0]
    for old, new in enumerate(p):
        inv[new] = old
    v = t.matrix_rows()
    return Triad(v[inv[0]][inv[1]], v[inv[0]][inv[2]], v[inv[1]][inv[2]])


def transpose_triad(t: Triad) -> Triad:
    """Transpose of the underlying matrix: entrywise reciprocal of the triad."""
    return Triad(1.0 / t.t12, 1.0 / t.t13, 1.0 / t.t23)


def power_transform(t: Triad, b: float) -> Triad:
    """Entrywise power (t12^b, t13^b, t23^b); preserves reciprocity for any finite b."""
    b = float(b)
    if not math.isfinite(b):
        raise DomainError(f"b must be finite, got {b!r}")
    return Triad(t.t12**b, t.t13**b, t.t23**b)


def scale_transform(t: Triad, k: float) -> Triad:
    """Ratio-preserving rescaling (k*t12, k^2*t13, k*t23), k > 0."""
    k = _require_positive_finite("k", k)
    return Triad(k * t.t12, k * k * t.t13, k * t.t23)


def single_entry_perturb(t: Triad, position: str, delta: float) -> Triad:
    """Replace one entry of a consistent triad by its delta-th power.

    The below-diagonal mate follows by reciprocity.  Preconditions follow the
    monotonicity axioms: the input must be consistent and the chosen entry
    must differ from 1.
    """
    delta = float(delta)
    if not math.isfinite(delta):
        raise DomainError(f"delta must be finite, got {delta!r}")
    if not is_consistent(t):
        raise DomainError(f"input triad must be consistent, got consistency ratio {consistency_ratio(t)!r}")
    entry = t.entry(str(position))
    if entry == 1.0:
        raise DomainError(f"entry at position {position} equals 1; the perturbed entry must differ from 1")
    powered = entry**delta
    if str(position) == "12":
        return Triad(powered, t.t13, t.t23)
    if str(position) == "13":
        return Triad(t.t12, powered, t.t23)
    return Triad(t.t12, t.t13, powered)


@dataclass(frozen=True)
class ReductionStep:
    """One rewrite in the canonicalization pipeline.

    ``rule`` is the axiom-shaped rewrite applied ("SI", "HTA" or "IIP"),
    ``factor`` its parameter (the SI scale k, None otherwise) and ``triad``
    the intermediate result, so a trace replays without any other state.
    """

    rule: str
    factor: float | None
    triad: Triad


@dataclass(frozen=True)
class CanonicalForm:
    """Outcome of reducing a triad to the normal form (1; ratio; 1), ratio >= 1."""

    ratio: float
    steps: tuple[ReductionStep, ...]


def _apply_step_rule(t: Triad, step: ReductionStep) -> Triad:
    if step.rule == "SI":
        return scale_transform(t, step.factor)
    if step.rule == "HTA":
        return Triad(1.0, t.t13 / t.t23, 1.0)
    if step.rule == "IIP":
        return transpose_triad(t)
    raise DomainError(f"unknown reduction rule {step.rule!r}")


def canonicalize(t: Triad) -> CanonicalForm:
    """Reduce a triad to (1; ratio; 1) with ratio = max(x, 1/x).

    Pipeline: rescale by k = 1/t12 so the first entry becomes 1, collapse the
    (1; a; b) form to (1; a/b; 1), and invert preferences when the remaining
    ratio falls below 1.
    """
    k = 1.0 / t.t12
    s1 = scale_transform(t, k)
    steps = [ReductionStep("SI", k, s1)]
    s2 = Triad(1.0, s1.t13 / s1.t23, 1.0)
    steps.append(ReductionStep("HTA", None, s2))
    ratio = s2.t13
    if ratio < 1.0:
        s3 = transpose_triad(s2)
        steps.append(ReductionStep("IIP", None, s3))
        ratio = s3.t13
    return CanonicalForm(ratio=ratio, steps=tuple(steps))


def replay_reduction(t: Triad, form: CanonicalForm) -> Triad:
    """Re-apply a trace from `t`; raises if any intermediate disagrees."""
    current = t
    for step in form.steps:
        current = _apply_step_rule(current, step)
        if current != step.triad:
            raise DomainError(f"trace replay diverged at rule {step.rule}: {current} != {step.triad}")
    return current
