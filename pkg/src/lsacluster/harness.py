"""Experiment harness: corpus ingestion, the representation x stemmer x
measure grid, and result serialization.

A corpus is a directory of category subdirectories holding UTF-8 text
files. Each grid cell clusters one vector representation of the corpus and
scores it against the directory labels; cell failures are recorded and the
grid keeps going.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .cluster import ClusterConfig, run_averaged
from .errors import ConfigError, InvalidCorpus, LsaClusterError, MissingRoot
from .evaluation import (ResultRow, average_reports, overall, render_results_table,
                         write_results_csv)
from .lsa_summarizer import choose_summary_k, render_summary, summarize
from .measures import MeasureKind
from .preprocess import (DEFAULT_MIN_SENTENCE_TOKENS, MarkerSet, RawDocument, StemmerMode,
                         extract_terms, load_markers, load_stoplist, normalize,
                         prepare_sentences, split_sentences, tokenize)
from .vsm import TermDocument, build_vocabulary, dump_vectors, tfidf_vector

log = logging.getLogger(__name__)

REPRESENTATIONS = ("fulltext", "summary")
ALL_MEASURES = tuple(MeasureKind)
ALL_STEMMERS = (StemmerMode.NONE, StemmerMode.LIGHT, StemmerMode.ROOT)


@dataclass
class IngestResult:
    """Documents in stable path order plus ingestion warnings."""

    documents: list[RawDocument]
    categories: list[str]
    skipped: list[str]
    empty_categories: list[str]


def ingest(root: str | Path) -> IngestResult:
    """Read a corpus tree. Undecodable files are skipped with a warning;
    empty category directories are noted and excluded."""
    root = Path(root)
    if not root.is_dir():
        raise MissingRoot(f"corpus root {str(root)!r} is not a directory")

    documents: list[RawDocument] = []
    categories: list[str] = []
    skipped: list[str] = []
    empty: list[str] = []
    for cat_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        category = cat_dir.name
        count = 0
        for path in sorted(p for p in cat_dir.iterdir() if p.is_file()):
            doc_id = f"{category}/{path.name}"
            try:
                text = path.read_text(encoding="utf-8")
            except (UnicodeDecodeError, OSError) as exc:
                log.warning("skipping unreadable file %s: %s", doc_id, exc)
                skipped.append(doc_id)
                continue
            documents.append(RawDocument(doc_id=doc_id, category=category, text=text))
            count += 1
        if count:
            categories.append(category)
        else:
            log.warning("category directory %s is empty", category)
            empty.append(category)
    return IngestResult(documents=documents, categories=categories,
                        skipped=skipped, empty_categories=empty)


@dataclass(frozen=True)
class CategoryStats:
    category: str
    documents: int
    tokens: int


def corpus_stats(documents: Sequence[RawDocument]) -> list[CategoryStats]:
    """Per-category document and raw token counts (post-normalization,
    before stop-word removal)."""
    docs: dict[str, int] = {}
    tokens: dict[str, int] = {}
    for doc in documents:
        docs[doc.category] = docs.get(doc.category, 0) + 1
        tokens[doc.category] = tokens.get(doc.category, 0) + len(tokenize(normalize(doc.text)))
    return [CategoryStats(cat, docs[cat], tokens[cat]) for cat in sorted(docs)]


def format_stats(stats: Sequence[CategoryStats]) -> str:
    lines = [f"{'category':<24}{'documents':>10}{'tokens':>10}"]
    for entry in stats:
        lines.append(f"{entry.category:<24}{entry.documents:>10}{entry.tokens:>10}")
    total_docs = sum(e.documents for e in stats)
    total_tokens = sum(e.tokens for e in stats)
    lines.append(f"{'total':<24}{total_docs:>10}{total_tokens:>10}")
    return "\n".join(lines)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one grid run; JSON configs mirror these fields."""

    corpus_root: str
    representations: tuple[str, ...] = REPRESENTATIONS
    stemmers: tuple[StemmerMode, ...] = ALL_STEMMERS
    measures: tuple[MeasureKind, ...] = ALL_MEASURES
    summary_k: int | str | None = None
    k: int | None = None
    runs: int = 5
    seed: int = 0
    max_iters: int = 100
    min_sentence_tokens: int = DEFAULT_MIN_SENTENCE_TOKENS
    output_dir: str = "results"
    write_summaries: bool = False
    dump_vectors: bool = False
    stopwords_path: str | None = None
    markers_path: str | None = None

    def __post_init__(self) -> None:
        for rep in self.representations:
            if rep not in REPRESENTATIONS:
                raise ConfigError(f"unknown representation {rep!r}")
        if not self.representations or not self.stemmers or not self.measures:
            raise ConfigError("representations, stemmers and measures must be nonempty")
        if self.runs < 1 or self.max_iters < 1 or self.min_sentence_tokens < 1:
            raise ConfigError("runs, max_iters and min_sentence_tokens must be at least 1")
        if self.k is not None and self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.summary_k is not None:
            try:
                choose_summary_k(10, self.summary_k)
            except (ValueError, TypeError) as exc:
                raise ConfigError(f"bad summary_k: {exc}") from exc

    @classmethod
    def from_json(cls, path: str | Path, **overrides) -> "ExperimentConfig":
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        raw.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_dict(raw)

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "corpus_root" not in raw:
            raise ConfigError("config needs corpus_root")
        values = dict(raw)
        if "representations" in values:
            values["representations"] = tuple(values["representations"])
        if "stemmers" in values:
            values["stemmers"] = tuple(StemmerMode.parse(s) for s in values["stemmers"])
        if "measures" in values:
            values["measures"] = tuple(MeasureKind.parse(m) for m in values["measures"])
        try:
            return cls(**values)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    def to_dict(self) -> dict:
        data = dataclasses.asdict(self)
        data["stemmers"] = [s.value for s in self.stemmers]
        data["measures"] = [m.value for m in self.measures]
        data["representations"] = list(self.representations)
        for key in ("corpus_root", "output_dir", "stopwords_path", "markers_path"):
            if data[key] is not None:
                data[key] = str(data[key])
        return data


@dataclass
class CellOutcome:
    representation: str
    stemmer: str
    measure: str
    status: str
    seconds: float
    error: str | None = None


@dataclass
class GridResult:
    rows: list[ResultRow]
    cells: list[CellOutcome]
    output_dir: Path
    csv_path: Path
    manifest_path: Path
    failed: bool


def _summary_terms(doc: RawDocument, markers: MarkerSet, stoplist: frozenset[str],
                   stemmer: StemmerMode, summary_k: int | str | None) -> tuple[list[str], str]:
    """Summarize one normalized document and re-tokenize the rendered text."""
    sentences = split_sentences(doc, markers)
    prepared = prepare_sentences(sentences, stoplist, stemmer)
    k = choose_summary_k(len(sentences), summary_k)
    summary = summarize(prepared, k)
    rendered = render_summary(doc, summary, markers)
    return extract_terms(normalize(rendered), stoplist, stemmer), rendered


def run_grid(config: ExperimentConfig) -> GridResult:
    """Run every configured (representation, stemmer, measure) cell.

    Writes results.csv, results_table.txt and manifest.json under
    config.output_dir, plus optional summaries/ and vector dumps. A failing
    cell is logged in the manifest and the grid continues.
    """
    ingest_result = ingest(config.corpus_root)
    documents = ingest_result.documents
    if not documents:
        raise InvalidCorpus("corpus has no readable documents")
    if len(ingest_result.categories) < 2:
        raise InvalidCorpus("clustering needs at least two categories")

    stoplist = load_stoplist(config.stopwords_path)
    markers = load_markers(config.markers_path, config.min_sentence_tokens)
    k = config.k if config.k is not None else len(ingest_result.categories)

    normalized = [RawDocument(d.doc_id, d.category, normalize(d.text)) for d in documents]
    labels = {d.doc_id: d.category for d in documents}

    output_dir = Path(config.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    rows: list[ResultRow] = []
    cells: list[CellOutcome] = []
    preparations: list[dict] = []
    failed = False

    for representation in config.representations:
        for stemmer in config.stemmers:
            prep_start = time.perf_counter()
            try:
                term_docs = []
                for doc in normalized:
                    if representation == "fulltext":
                        terms = extract_terms(doc.text, stoplist, stemmer)
                    else:
                        terms, rendered = _summary_terms(doc, markers, stoplist, stemmer,
                                                         config.summary_k)
                        if config.write_summaries:
                            target = output_dir / "summaries" / stemmer.value / doc.doc_id
                            target.parent.mkdir(parents=True, exist_ok=True)
                            target.write_text(rendered, encoding="utf-8")
                    term_docs.append(TermDocument(doc.doc_id, tuple(terms)))
                vocabulary = build_vocabulary(term_docs)
                vectors = [tfidf_vector(td, vocabulary) for td in term_docs]
                if config.dump_vectors:
                    dump_vectors(vectors, output_dir / f"vectors_{representation}_{stemmer.value}.txt")
                prep_error = None
            except LsaClusterError as exc:
                prep_error = f"{type(exc).__name__}: {exc}"
                log.error("preparation failed for %s/%s: %s", representation, stemmer.value, exc)
            preparations.append({"representation": representation, "stemmer": stemmer.value,
                                 "seconds": round(time.perf_counter() - prep_start, 6),
                                 "error": prep_error})

            for measure in config.measures:
                if prep_error is not None:
                    failed = True
                    cells.append(CellOutcome(representation, stemmer.value, measure.value,
                                             "failed", 0.0, prep_error))
                    continue
                cell_start = time.perf_counter()
                try:
                    cluster_config = ClusterConfig(k=k, measure=measure, runs=config.runs,
                                                   seed=config.seed, max_iters=config.max_iters)
                    results = run_averaged(vectors, cluster_config, vocabulary.size)
                    reports = [overall(res.assignments, labels) for res in results]
                    for run_number, report in enumerate(reports, start=1):
                        rows.append(ResultRow(representation, stemmer.value, measure.value,
                                              str(run_number), report.purity, report.entropy))
                    avg_purity, avg_entropy = average_reports(reports)
                    rows.append(ResultRow(representation, stemmer.value, measure.value,
                                          "avg", avg_purity, avg_entropy))
                    cells.append(CellOutcome(representation, stemmer.value, measure.value, "ok",
                                             round(time.perf_counter() - cell_start, 6)))
                except LsaClusterError as exc:
                    failed = True
                    log.error("cell %s/%s/%s failed: %s", representation, stemmer.value,
                              measure.value, exc)
                    cells.append(CellOutcome(representation, stemmer.value, measure.value,
                                             "failed", round(time.perf_counter() - cell_start, 6),
                                             f"{type(exc).__name__}: {exc}"))

    csv_path = output_dir / "results.csv"
    write_results_csv(rows, csv_path)
    (output_dir / "results_table.txt").write_text(render_results_table(rows), encoding="utf-8")

    manifest = {
        "version": __version__,
        "seed": config.seed,
        "k": k,
        "config": config.to_dict(),
        "corpus": {
            "root": str(config.corpus_root),
            "documents": len(documents),
            "categories": ingest_result.categories,
            "skipped": ingest_result.skipped,
            "empty_categories": ingest_result.empty_categories,
        },
        "preparations": preparations,
        "cells": [dataclasses.asdict(c) for c in cells],
    }
    manifest_path = output_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")

    return GridResult(rows=rows, cells=cells, output_dir=output_dir, csv_path=csv_path,
                      manifest_path=manifest_path, failed=failed)
