"""LSA-based extractive summarization and clustering of Arabic documents.

The pipeline: normalize and tokenize Arabic text, optionally stem it
(light affix stripping or tri-literal root extraction), summarize each
document by latent semantic analysis, represent documents or their
summaries as tf-idf vectors, cluster with K-means under one of five
similarity measures, and score clusters by purity and entropy.
"""

__version__ = "0.1.0"

from .errors import LsaClusterError
from .preprocess import (MarkerSet, RawDocument, Sentence, StemmerMode, Token,
                         light_stem, normalize, remove_stopwords, root_stem,
                         split_sentences, tokenize)
from .linalg import DenseMatrix, SvdFactors, matmul, svd
from .lsa_summarizer import (Summary, TermSentenceMatrix, build_term_sentence_matrix,
                             choose_summary_k, render_summary, summarize)
from .vsm import DocVector, TermDocument, Vocabulary, build_vocabulary, tfidf_vector
from .measures import MeasureKind, avg_kl, cosine, euclidean, jaccard, pearson, to_distance
from .cluster import ClusterConfig, ClusteringResult, kmeans, run_averaged
from .evaluation import EvalReport, ResultRow, entropy, overall, purity, write_results_csv
from .harness import ExperimentConfig, GridResult, corpus_stats, ingest, run_grid

__all__ = [
    "__version__", "LsaClusterError",
    "MarkerSet", "RawDocument", "Sentence", "StemmerMode", "Token",
    "light_stem", "normalize", "remove_stopwords", "root_stem", "split_sentences", "tokenize",
    "DenseMatrix", "SvdFactors", "matmul", "svd",
    "Summary", "TermSentenceMatrix", "build_term_sentence_matrix", "choose_summary_k",
    "render_summary", "summarize",
    "DocVector", "TermDocument", "Vocabulary", "build_vocabulary", "tfidf_vector",
    "MeasureKind", "avg_kl", "cosine", "euclidean", "jaccard", "pearson", "to_distance",
    "ClusterConfig", "ClusteringResult", "kmeans", "run_averaged",
    "EvalReport", "ResultRow", "entropy", "overall", "purity", "write_results_csv",
    "ExperimentConfig", "GridResult", "corpus_stats", "ingest", "run_grid",
]
