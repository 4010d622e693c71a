"""Cluster quality: purity and normalized entropy, per cluster and overall.

Both overall scores are size-weighted averages of the per-cluster values.
Results serialize to a CSV with one row per run plus an averaged row, and
to a small human-readable table.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import EmptyCluster


@dataclass(frozen=True)
class ClusterQuality:
    size: int
    purity: float
    entropy: float


@dataclass(frozen=True)
class EvalReport:
    """Per-cluster quality plus size-weighted overall purity and entropy."""

    clusters: tuple[ClusterQuality, ...]
    purity: float
    entropy: float
    n_documents: int
    n_categories: int


def purity(categories: Sequence[str]) -> float:
    """Fraction of the cluster taken by its most common category, in (0, 1]."""
    if not categories:
        raise EmptyCluster("purity of an empty cluster is undefined")
    counts = Counter(categories)
    return max(counts.values()) / len(categories)


def entropy(categories: Sequence[str], n_categories: int) -> float:
    """Category entropy of one cluster normalized by log of the category
    count, in [0, 1]. A single-category dataset has entropy 0 by convention."""
    if not categories:
        raise EmptyCluster("entropy of an empty cluster is undefined")
    if n_categories < 1:
        raise ValueError("n_categories must be at least 1")
    if n_categories == 1:
        return 0.0
    n = len(categories)
    acc = 0.0
    for count in Counter(categories).values():
        p = count / n
        acc -= p * math.log(p)
    return acc / math.log(n_categories)


def weighted_average(values: Sequence[float], sizes: Sequence[int]) -> float:
    """Size-weighted mean, the aggregation used for both overall scores."""
    total = sum(sizes)
    if total <= 0:
        raise ValueError("sizes must sum to a positive count")
    return sum(v * s for v, s in zip(values, sizes)) / total


def overall(assignments: Mapping[str, int], labels: Mapping[str, str]) -> EvalReport:
    """Score a clustering against gold category labels."""
    if not assignments:
        raise EmptyCluster("no assignments to evaluate")
    members: dict[int, list[str]] = {}
    for doc_id in sorted(assignments):
        members.setdefault(assignments[doc_id], []).append(labels[doc_id])
    n_categories = len(set(labels.values()))

    qualities = []
    for cluster_id in sorted(members):
        cats = members[cluster_id]
        qualities.append(ClusterQuality(size=len(cats), purity=purity(cats),
                                        entropy=entropy(cats, n_categories)))
    sizes = [q.size for q in qualities]
    return EvalReport(clusters=tuple(qualities),
                      purity=weighted_average([q.purity for q in qualities], sizes),
                      entropy=weighted_average([q.entropy for q in qualities], sizes),
                      n_documents=sum(sizes),
                      n_categories=n_categories)


def average_reports(reports: Sequence[EvalReport]) -> tuple[float, float]:
    """Arithmetic mean of (purity, entropy) across runs."""
    if not reports:
        raise ValueError("no reports to average")
    n = len(reports)
    return (sum(r.purity for r in reports) / n, sum(r.entropy for r in reports) / n)


@dataclass(frozen=True)
class ResultRow:
    """One results.csv line; run is a 1-based number or "avg"."""

    representation: str
    stemmer: str
    measure: str
    run: str
    purity: float
    entropy: float


CSV_HEADER = ("representation", "stemmer", "measure", "run", "purity", "entropy")


def write_results_csv(rows: Sequence[ResultRow], path: str | Path) -> None:
    """Write rows with fixed six-decimal formatting so identical runs
    produce byte-identical files."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([row.representation, row.stemmer, row.measure, row.run,
                             f"{row.purity:.6f}", f"{row.entropy:.6f}"])


def render_results_table(rows: Sequence[ResultRow]) -> str:
    """Render averaged rows as one block per (representation, stemmer) with
    a column per measure and lines for entropy and purity."""
    averaged = [r for r in rows if r.run == "avg"]
    blocks: dict[tuple[str, str], list[ResultRow]] = {}
    for row in averaged:
        blocks.setdefault((row.representation, row.stemmer), []).append(row)

    lines = []
    for (representation, stemmer), block in blocks.items():
        lines.append(f"{representation} / stemmer={stemmer}")
        header = ["        "] + [f"{row.measure:>10}" for row in block]
        lines.append("".join(header))
        lines.append("".join(["entropy "] + [f"{row.entropy:>10.4f}" for row in block]))
        lines.append("".join(["purity  "] + [f"{row.purity:>10.4f}" for row in block]))
        lines.append("")
    return "\n".join(lines)
