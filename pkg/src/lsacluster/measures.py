"""Similarity and distance measures over sparse document vectors.

Euclidean and averaged KL are distances already; cosine, Jaccard and
Pearson are similarities that to_distance converts. All functions iterate
dimensions in sorted order so results are bitwise symmetric in their
arguments.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import ConfigError, DegenerateVariance, OutOfRange, ZeroVector
from .vsm import DocVector

# Pearson denominator factors at or below this are treated as constant input.
VARIANCE_TOLERANCE = 1e-12
# Raw values may drift past their theoretical range by rounding; anything
# beyond this slack is rejected, anything inside is clamped.
_RANGE_SLACK = 1e-9


class MeasureKind(Enum):
    """The five measures and their command-line names."""

    EUCLIDEAN = "euclidean"
    COSINE = "cosine"
    JACCARD = "jaccard"
    PEARSON = "pearson"
    AVGKL = "avgkl"

    @classmethod
    def parse(cls, name: str) -> "MeasureKind":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ConfigError(f"unknown measure {name!r}, expected one of: {valid}") from None


def _sorted_union(wa: dict[int, float], wb: dict[int, float]) -> list[int]:
    return sorted(wa.keys() | wb.keys())


def _dot(wa: dict[int, float], wb: dict[int, float]) -> float:
    acc = 0.0
    for dim in sorted(wa.keys() & wb.keys()):
        acc += wa[dim] * wb[dim]
    return acc


def _sum_squares(weights: dict[int, float]) -> float:
    acc = 0.0
    for dim in sorted(weights):
        value = weights[dim]
        acc += value * value
    return acc


def _total(weights: dict[int, float]) -> float:
    acc = 0.0
    for dim in sorted(weights):
        acc += weights[dim]
    return acc


def euclidean(a: DocVector, b: DocVector) -> float:
    """L2 distance over the union of supports."""
    wa, wb = a.weights, b.weights
    acc = 0.0
    for dim in _sorted_union(wa, wb):
        diff = wa.get(dim, 0.0) - wb.get(dim, 0.0)
        acc += diff * diff
    return math.sqrt(acc)


def cosine(a: DocVector, b: DocVector) -> float:
    """Cosine similarity in [0, 1]; raises ZeroVector if either norm is zero."""
    norm_a = math.sqrt(_sum_squares(a.weights))
    norm_b = math.sqrt(_sum_squares(b.weights))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cosine is undefined for zero vectors")
    return min(1.0, _dot(a.weights, b.weights) / (norm_a * norm_b))


def jaccard(a: DocVector, b: DocVector) -> float:
    """Tanimoto similarity a.b / (|a|^2 + |b|^2 - a.b) in [0, 1]."""
    sq_a = _sum_squares(a.weights)
    sq_b = _sum_squares(b.weights)
    if sq_a == 0.0 and sq_b == 0.0:
        raise ZeroVector("jaccard is undefined when both vectors are zero")
    dot = _dot(a.weights, b.weights)
    return min(1.0, dot / (sq_a + sq_b - dot))


def pearson(a: DocVector, b: DocVector, m: int) -> float:
    """Pearson correlation over the full m-dimensional vocabulary, missing
    dimensions counted as zeros. Raises DegenerateVariance for constant
    input (a zero vector is constant)."""
    if m < 1:
        raise ValueError("vocabulary size m must be at least 1")
    dot = _dot(a.weights, b.weights)
    total_a = _total(a.weights)
    total_b = _total(b.weights)
    factor_a = m * _sum_squares(a.weights) - total_a * total_a
    factor_b = m * _sum_squares(b.weights) - total_b * total_b
    if factor_a <= VARIANCE_TOLERANCE or factor_b <= VARIANCE_TOLERANCE:
        raise DegenerateVariance("pearson is undefined for constant vectors")
    value = (m * dot - total_a * total_b) / math.sqrt(factor_a * factor_b)
    return max(-1.0, min(1.0, value))


def avg_kl(a: DocVector, b: DocVector) -> float:
    """Averaged Kullback-Leibler divergence between the two vectors seen as
    probability distributions (L1-normalized first).

    With equal-mass distributions the mixture weights are 1/2 each, so the
    result is (KL(P||M) + KL(Q||M)) / 2 with M the midpoint; terms absent
    from both vectors are skipped and 0*ln(0) counts as zero. Symmetric,
    nonnegative, zero exactly when the normalized inputs match.
    """
    mass_a = _total(a.weights)
    mass_b = _total(b.weights)
    if mass_a <= 0.0 or mass_b <= 0.0:
        raise ZeroVector("avg_kl needs nonzero mass on both sides")
    # One accumulator per side keeps the result bitwise symmetric: each sum
    # sees the same addend sequence whichever way the arguments come in.
    acc_a = 0.0
    acc_b = 0.0
    for dim in _sorted_union(a.weights, b.weights):
        pa = a.weights.get(dim, 0.0) / mass_a
        pb = b.weights.get(dim, 0.0) / mass_b
        mid = 0.5 * (pa + pb)
        if pa > 0.0:
            acc_a += pa * math.log(pa / mid)
        if pb > 0.0:
            acc_b += pb * math.log(pb / mid)
    return max(0.0, 0.5 * (acc_a + acc_b))


def to_distance(kind: MeasureKind, raw: float) -> float:
    """Convert a raw measure value to a distance.

    Euclidean and averaged KL pass through; cosine and Jaccard become
    1 - similarity; Pearson becomes 1 - r for r >= 0 and |r| otherwise.
    Values outside the kind's valid range raise OutOfRange.
    """
    if kind in (MeasureKind.EUCLIDEAN, MeasureKind.AVGKL):
        if raw < -_RANGE_SLACK:
            raise OutOfRange(f"{kind.value} value {raw} is negative")
        return max(0.0, raw)
    if kind in (MeasureKind.COSINE, MeasureKind.JACCARD):
        if raw < -_RANGE_SLACK or raw > 1.0 + _RANGE_SLACK:
            raise OutOfRange(f"{kind.value} similarity {raw} outside [0, 1]")
        return 1.0 - max(0.0, min(1.0, raw))
    if abs(raw) > 1.0 + _RANGE_SLACK:
        raise OutOfRange(f"pearson correlation {raw} outside [-1, 1]")
    raw = max(-1.0, min(1.0, raw))
    return 1.0 - raw if raw >= 0.0 else -raw


def distance(kind: MeasureKind, a: DocVector, b: DocVector, m: int | None = None) -> float:
    """Raw measure plus to_distance in one call. Pearson requires the
    vocabulary size m; measure errors propagate to the caller."""
    if kind is MeasureKind.EUCLIDEAN:
        raw = euclidean(a, b)
    elif kind is MeasureKind.COSINE:
        raw = cosine(a, b)
    elif kind is MeasureKind.JACCARD:
        raw = jaccard(a, b)
    elif kind is MeasureKind.PEARSON:
        if m is None:
            raise ValueError("pearson distance requires the vocabulary size m")
        raw = pearson(a, b, m)
    else:
        raw = avg_kl(a, b)
    return to_distance(kind, raw)
