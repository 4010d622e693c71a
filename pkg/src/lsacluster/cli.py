"""Command line interface.

Exit codes: 0 success, 1 configuration error, 2 corpus error, 3 at least
one grid cell failed while the rest of the run completed.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .errors import (ConfigError, EmptyCorpus, EmptyDocument, InvalidCorpus, LsaClusterError,
                     MissingRoot)
from .harness import ExperimentConfig, corpus_stats, format_stats, ingest, run_grid
from .lsa_summarizer import choose_summary_k, render_summary, summarize
from .preprocess import (RawDocument, StemmerMode, load_markers, load_stoplist, normalize,
                         prepare_sentences, split_sentences)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CORPUS = 2
EXIT_PARTIAL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsacluster",
        description="Summarize and cluster an Arabic document corpus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("ingest-stats", help="print per-category document and token counts")
    p_stats.add_argument("root", help="corpus root directory")

    p_sum = sub.add_parser("summarize", help="print an extractive summary of one document")
    p_sum.add_argument("file", help="UTF-8 text file")
    p_sum.add_argument("--k", default=None, help="sentences to select (integer or e.g. 30%%)")
    p_sum.add_argument("--stemmer", default="none", help="none, light or root")
    p_sum.add_argument("--min-sentence-tokens", type=int, default=4)

    p_run = sub.add_parser("run", help="run the clustering grid described by a config")
    p_run.add_argument("--config", required=True, help="JSON experiment config")
    p_run.add_argument("--corpus", dest="corpus_root", help="override corpus root")
    p_run.add_argument("--output", dest="output_dir", help="override output directory")
    p_run.add_argument("--representations", nargs="+", choices=["fulltext", "summary"])
    p_run.add_argument("--stemmers", nargs="+", choices=[m.value for m in StemmerMode])
    p_run.add_argument("--measures", nargs="+",
                       choices=["euclidean", "cosine", "jaccard", "pearson", "avgkl"])
    p_run.add_argument("--k", type=int, help="override cluster count")
    p_run.add_argument("--runs", type=int, help="override run count")
    p_run.add_argument("--seed", type=int, help="override base seed")
    p_run.add_argument("--max-iters", dest="max_iters", type=int)
    p_run.add_argument("--summary-k", dest="summary_k", help="integer or percentage")
    p_run.add_argument("--write-summaries", dest="write_summaries", action="store_const",
                       const=True, default=None)
    p_run.add_argument("--dump-vectors", dest="dump_vectors", action="store_const",
                       const=True, default=None)
    return parser


def _cmd_ingest_stats(args: argparse.Namespace) -> int:
    result = ingest(args.root)
    print(format_stats(corpus_stats(result.documents)))
    if result.skipped:
        print(f"skipped {len(result.skipped)} unreadable file(s)", file=sys.stderr)
    return EXIT_OK


def _cmd_summarize(args: argparse.Namespace) -> int:
    try:
        text = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CORPUS
    stemmer = StemmerMode.parse(args.stemmer)
    markers = load_markers(min_sentence_tokens=args.min_sentence_tokens)
    document = RawDocument(doc_id=args.file, category="", text=normalize(text))
    sentences = split_sentences(document, markers)
    prepared = prepare_sentences(sentences, load_stoplist(), stemmer)
    k = _parse_summary_k(args.k)
    summary = summarize(prepared, choose_summary_k(len(sentences), k))
    print(render_summary(document, summary, markers))
    return EXIT_OK


def _parse_summary_k(value: str | None) -> int | str | None:
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        return value


def _cmd_run(args: argparse.Namespace) -> int:
    overrides = {
        "corpus_root": args.corpus_root,
        "output_dir": args.output_dir,
        "representations": args.representations,
        "stemmers": args.stemmers,
        "measures": args.measures,
        "k": args.k,
        "runs": args.runs,
        "seed": args.seed,
        "max_iters": args.max_iters,
        "summary_k": _parse_summary_k(args.summary_k),
        "write_summaries": args.write_summaries,
        "dump_vectors": args.dump_vectors,
    }
    config = ExperimentConfig.from_json(args.config, **overrides)
    result = run_grid(config)
    print(f"wrote {result.csv_path}")
    if result.failed:
        bad = [c for c in result.cells if c.status != "ok"]
        print(f"{len(bad)} cell(s) failed; see {result.manifest_path}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG

    try:
        if args.command == "ingest-stats":
            return _cmd_ingest_stats(args)
        if args.command == "summarize":
            return _cmd_summarize(args)
        return _cmd_run(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (MissingRoot, InvalidCorpus, EmptyCorpus, EmptyDocument) as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return EXIT_CORPUS
    except LsaClusterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
