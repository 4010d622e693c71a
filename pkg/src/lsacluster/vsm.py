"""Vector space model: corpus vocabulary and sparse tf-idf document vectors."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import EmptyCorpus


@dataclass(frozen=True)
class TermDocument:
    """A document reduced to its term sequence (stems, in order)."""

    doc_id: str
    terms: tuple[str, ...]


@dataclass(frozen=True)
class Vocabulary:
    """Corpus vocabulary in first-occurrence order with document frequencies."""

    terms: tuple[str, ...]
    index: Mapping[str, int]
    df: tuple[int, ...]
    n_docs: int

    @property
    def size(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class DocVector:
    """Sparse tf-idf vector: dimension -> positive weight, zeros omitted."""

    doc_id: str
    weights: dict[int, float]


def build_vocabulary(documents: Sequence[TermDocument]) -> Vocabulary:
    """Collect every distinct term with its document frequency.

    Term order is first occurrence across documents in the given order,
    which keeps dimension numbering reproducible.
    """
    if not documents:
        raise EmptyCorpus("no documents")
    terms: list[str] = []
    index: dict[str, int] = {}
    df: list[int] = []
    for doc in documents:
        for term in dict.fromkeys(doc.terms):
            dim = index.get(term)
            if dim is None:
                index[term] = len(terms)
                terms.append(term)
                df.append(1)
            else:
                df[dim] += 1
    return Vocabulary(terms=tuple(terms), index=index, df=tuple(df), n_docs=len(documents))


def tfidf_vector(document: TermDocument, vocabulary: Vocabulary) -> DocVector:
    """Weight each in-vocabulary term by tf * ln(|D| / df).

    Terms present in every document get weight zero and are omitted, as are
    terms missing from the vocabulary.
    """
    weights: dict[int, float] = {}
    for term, tf in Counter(document.terms).items():
        dim = vocabulary.index.get(term)
        if dim is None:
            continue
        weight = tf * math.log(vocabulary.n_docs / vocabulary.df[dim])
        if weight > 0.0:
            weights[dim] = weight
    return DocVector(doc_id=document.doc_id, weights=weights)


def dump_vectors(vectors: Sequence[DocVector], path: str | Path) -> None:
    """Debug dump: one line per vector, `doc_id<TAB>dim:weight...` with
    weights at six significant digits."""
    lines = []
    for vec in vectors:
        cells = [f"{dim}:{vec.weights[dim]:.6g}" for dim in sorted(vec.weights)]
        lines.append("\t".join([vec.doc_id, *cells]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
