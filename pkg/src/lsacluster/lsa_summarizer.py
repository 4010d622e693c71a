"""Extractive summarization via latent semantic analysis.

Sentences become columns of a weighted term-sentence matrix; after an SVD,
one sentence is picked per topic: the not-yet-selected sentence with the
largest component in that topic's right singular vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections import Counter
from typing import Mapping, Sequence

import numpy as np

from .errors import EmptyInput, IndexOutOfRange
from .linalg import DenseMatrix, svd
from .preprocess import MarkerSet, RawDocument, Sentence, default_markers, split_sentences

# Joins selected sentences when rendering summary text.
DEFAULT_JOINER = "۔ "

# Without an explicit k: five sentences or 30% of the document, whichever
# is smaller, but always at least one.
DEFAULT_SUMMARY_SENTENCES = 5
DEFAULT_SUMMARY_RATIO = 0.3


@dataclass(frozen=True)
class TermSentenceMatrix:
    """Weighted term-by-sentence matrix with its row labeling.

    Entry (i, j) is tf(term i, sentence j) * ln(N / n_i) where N is the
    number of sentences and n_i the number of sentences containing term i.
    Rows are ordered by first occurrence.
    """

    matrix: DenseMatrix
    terms: tuple[str, ...]
    term_index: Mapping[str, int]
    sentence_count: int


@dataclass(frozen=True)
class Summary:
    """Selected sentence indices in topic order.

    degenerate marks the fallback taken when the matrix carries no signal:
    the first min(k, n) sentences are selected instead.
    """

    selected: tuple[int, ...]
    k: int
    k_effective: int
    degenerate: bool = False


def build_term_sentence_matrix(sentences: Sequence[Sentence]) -> TermSentenceMatrix:
    """Build the weighted matrix from already stemmed/stop-filtered sentences."""
    if not sentences:
        raise EmptyInput("no sentences")
    terms: list[str] = []
    index: dict[str, int] = {}
    for sentence in sentences:
        for token in sentence.tokens:
            if token.stem not in index:
                index[token.stem] = len(terms)
                terms.append(token.stem)
    if not terms:
        raise EmptyInput("sentences contain no terms")

    n = len(sentences)
    counts = np.zeros((len(terms), n))
    for j, sentence in enumerate(sentences):
        for stem, tf in Counter(t.stem for t in sentence.tokens).items():
            counts[index[stem], j] = tf
    idf = np.array([math.log(n / np.count_nonzero(row)) for row in counts])
    return TermSentenceMatrix(matrix=DenseMatrix(counts * idf[:, None]),
                              terms=tuple(terms), term_index=index, sentence_count=n)


def select_sentences(v: np.ndarray, k_effective: int) -> list[int]:
    """Greedy topic-wise pick: per topic the unselected sentence with the
    largest right-singular-vector component; ties go to the smaller index."""
    selected: list[int] = []
    taken = set()
    for topic in range(k_effective):
        best = -1
        best_value = -math.inf
        for i in range(v.shape[0]):
            if i in taken:
                continue
            value = v[i, topic]
            if value > best_value:
                best = i
                best_value = value
        selected.append(best)
        taken.add(best)
    return selected


def summarize(sentences: Sequence[Sentence], k: int) -> Summary:
    """Select up to k sentences, one per leading topic.

    When no term survives preprocessing or the matrix is all zero, the
    first min(k, n) sentences are returned with the degenerate flag set.
    """
    if not sentences:
        raise EmptyInput("no sentences")
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(sentences)

    if all(not s.tokens for s in sentences):
        count = min(k, n)
        return Summary(tuple(range(count)), k=k, k_effective=count, degenerate=True)

    tsm = build_term_sentence_matrix(sentences)
    factors = svd(tsm.matrix)
    if factors.rank == 0:
        count = min(k, n)
        return Summary(tuple(range(count)), k=k, k_effective=count, degenerate=True)

    k_effective = min(k, factors.rank, n)
    selected = select_sentences(factors.v, k_effective)
    return Summary(tuple(selected), k=k, k_effective=k_effective)


def render_summary(document: RawDocument, summary: Summary,
                   markers: MarkerSet | None = None,
                   joiner: str = DEFAULT_JOINER) -> str:
    """Join the selected sentences of a normalized document in their
    original order. Splitting must use the same markers the summary was
    produced with. An empty selection renders as an empty string."""
    sentences = split_sentences(document, markers if markers is not None else default_markers())
    for idx in summary.selected:
        if idx < 0 or idx >= len(sentences):
            raise IndexOutOfRange(f"sentence index {idx} outside 0..{len(sentences) - 1}")
    parts = [" ".join(t.surface for t in sentences[i].tokens) for i in sorted(summary.selected)]
    return joiner.join(parts)


def choose_summary_k(n_sentences: int, requested: int | str | None = None) -> int:
    """Resolve a summary length: explicit count, percentage string like
    "30%", or the default min(5, 30% of sentences), never below one."""
    if n_sentences < 1:
        raise ValueError("n_sentences must be at least 1")
    if requested is None:
        return min(DEFAULT_SUMMARY_SENTENCES,
                   max(1, math.floor(n_sentences * DEFAULT_SUMMARY_RATIO)))
    if isinstance(requested, str):
        text = requested.strip()
        if not text.endswith("%"):
            raise ValueError(f"expected an integer or percentage, got {requested!r}")
        ratio = float(text[:-1]) / 100.0
        if not 0.0 < ratio <= 1.0:
            raise ValueError("percentage must be in (0, 100]")
        return max(1, math.floor(n_sentences * ratio))
    if requested < 1:
        raise ValueError("k must be at least 1")
    return int(requested)
