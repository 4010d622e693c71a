"""K-means clustering over sparse document vectors with pluggable distance.

Initialization is plain Forgy: k distinct documents sampled by id with the
run's seed, so the outcome does not depend on input order. Centroids are
arithmetic means for every measure. Measure edge cases are mapped to
distances here: a zero vector against a nonzero one counts as maximally
far (cosine distance 1), two zero vectors as identical, a degenerate
Pearson pairing as distance 2, and averaged KL against a zero-mass side as
infinitely far so the document lands elsewhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Sequence

from . import measures
from .errors import DegenerateVariance, TooFewDocuments, ZeroVector, ZeroVocabulary
from .measures import MeasureKind
from .vsm import DocVector

DEFAULT_MAX_ITERS = 100
DEFAULT_RUNS = 5


@dataclass(frozen=True)
class ClusterConfig:
    """Parameters for one clustering experiment."""

    k: int
    measure: MeasureKind
    max_iters: int = DEFAULT_MAX_ITERS
    runs: int = DEFAULT_RUNS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.runs < 1:
            raise ValueError("runs must be at least 1")


@dataclass
class ClusteringResult:
    """Final assignments plus per-run metadata.

    objective_history holds, for each iteration, the within-cluster sum of
    squared distances for the Euclidean measure and the plain sum for the
    others.
    """

    assignments: dict[str, int]
    centroids: list[dict[int, float]]
    iterations_used: int
    converged: bool
    seed: int
    objective_history: list[float] = field(default_factory=list)


def assignment_distance(kind: MeasureKind, vec: DocVector, centroid: DocVector,
                        m: int) -> float:
    """Distance used during assignment, with measure edge cases resolved."""
    try:
        return measures.distance(kind, vec, centroid, m=m)
    except ZeroVector:
        both_zero = not vec.weights and not centroid.weights
        if both_zero:
            return 0.0
        if kind is MeasureKind.AVGKL:
            return math.inf
        return 1.0
    except DegenerateVariance:
        return 2.0


def _mean_centroid(members: Sequence[DocVector]) -> dict[int, float]:
    sums: dict[int, float] = {}
    for vec in members:
        for dim, weight in vec.weights.items():
            sums[dim] = sums.get(dim, 0.0) + weight
    count = len(members)
    return {dim: total / count for dim, total in sorted(sums.items())}


def kmeans(vectors: Sequence[DocVector], config: ClusterConfig, vocab_size: int) -> ClusteringResult:
    """Lloyd iteration until assignments stop changing or max_iters.

    Deterministic for a fixed seed, and invariant under permutation of the
    input vectors because the seed drives a sample of sorted document ids.
    An emptied cluster is repaired by reseeding it with the document
    farthest from its own centroid.
    """
    if vocab_size < 1:
        raise ZeroVocabulary("clustering needs a nonempty vocabulary")
    if len(vectors) < config.k:
        raise TooFewDocuments(f"{len(vectors)} documents cannot form {config.k} clusters")
    by_id = {vec.doc_id: vec for vec in vectors}
    if len(by_id) != len(vectors):
        raise ValueError("duplicate document ids")
    sorted_ids = sorted(by_id)

    rng = random.Random(config.seed)
    seeds = rng.sample(sorted_ids, config.k)
    centroids = [dict(by_id[doc_id].weights) for doc_id in seeds]

    assignments: dict[str, int] = {}
    history: list[float] = []
    converged = False
    iterations_used = config.max_iters

    for iteration in range(1, config.max_iters + 1):
        centroid_vecs = [DocVector(f"centroid:{c}", centroids[c]) for c in range(config.k)]
        new_assignments: dict[str, int] = {}
        doc_distances: dict[str, float] = {}
        for doc_id in sorted_ids:
            vec = by_id[doc_id]
            best = 0
            best_distance = math.inf
            for c in range(config.k):
                dist = assignment_distance(config.measure, vec, centroid_vecs[c], vocab_size)
                if dist < best_distance:
                    best = c
                    best_distance = dist
            new_assignments[doc_id] = best
            doc_distances[doc_id] = best_distance

        _repair_empty_clusters(new_assignments, doc_distances, config.k)

        unchanged = new_assignments == assignments
        assignments = new_assignments
        members: list[list[DocVector]] = [[] for _ in range(config.k)]
        for doc_id in sorted_ids:
            members[assignments[doc_id]].append(by_id[doc_id])
        centroids = [_mean_centroid(cluster) for cluster in members]

        history.append(_objective(config.measure, by_id, sorted_ids, assignments,
                                  centroids, vocab_size))
        if unchanged:
            converged = True
            iterations_used = iteration - 1
            break

    return ClusteringResult(assignments=assignments, centroids=centroids,
                            iterations_used=iterations_used, converged=converged,
                            seed=config.seed, objective_history=history)


def _repair_empty_clusters(assignments: dict[str, int], doc_distances: dict[str, float],
                           k: int) -> None:
    """Move the document farthest from its centroid into each empty cluster,
    never draining a cluster below one member."""
    while True:
        sizes = [0] * k
        for cluster in assignments.values():
            sizes[cluster] += 1
        empty = [c for c in range(k) if sizes[c] == 0]
        if not empty:
            return
        target = empty[0]
        candidate = None
        candidate_distance = -math.inf
        for doc_id in sorted(assignments):
            if sizes[assignments[doc_id]] < 2:
                continue
            if doc_distances[doc_id] > candidate_distance:
                candidate = doc_id
                candidate_distance = doc_distances[doc_id]
        if candidate is None:
            return
        assignments[candidate] = target
        doc_distances[candidate] = 0.0


def _objective(kind: MeasureKind, by_id: dict[str, DocVector], sorted_ids: list[str],
               assignments: dict[str, int], centroids: list[dict[int, float]],
               vocab_size: int) -> float:
    centroid_vecs = [DocVector(f"centroid:{c}", weights) for c, weights in enumerate(centroids)]
    total = 0.0
    for doc_id in sorted_ids:
        dist = assignment_distance(kind, by_id[doc_id], centroid_vecs[assignments[doc_id]],
                                   vocab_size)
        total += dist * dist if kind is MeasureKind.EUCLIDEAN else dist
    return total


def run_averaged(vectors: Sequence[DocVector], config: ClusterConfig,
                 vocab_size: int) -> list[ClusteringResult]:
    """One kmeans run per seed in seed .. seed + runs - 1."""
    return [kmeans(vectors, replace(config, seed=config.seed + offset), vocab_size)
            for offset in range(config.runs)]
