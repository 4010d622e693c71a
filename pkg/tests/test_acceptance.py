"""End-to-end acceptance checks, one per shipped guarantee.

Each test prints a single PASS/FAIL line (visible with pytest -s) and
asserts the same condition, so the suite doubles as a checklist.
"""

import json
import random
import time

import numpy as np
import pytest

import synth
from lsacluster.cli import main
from lsacluster.evaluation import entropy
from lsacluster.harness import ExperimentConfig, run_grid
from lsacluster.linalg import svd
from lsacluster.measures import MeasureKind, avg_kl, cosine, euclidean, jaccard, pearson
from lsacluster.preprocess import (
    RawDocument,
    StemmerMode,
    default_markers,
    default_stoplist,
    prepare_sentences,
    split_sentences,
)
from lsacluster.lsa_summarizer import summarize
from lsacluster.vsm import DocVector, TermDocument, Vocabulary, tfidf_vector


def _verdict(name: str, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def _random_sparse(rng, doc_id, dims=40, max_nnz=10):
    support = rng.sample(range(dims), rng.randint(1, max_nnz))
    return DocVector(doc_id, {d: rng.uniform(0.1, 5.0) for d in support})


def test_svd_properties():
    """Reconstruction, orthonormality, ordering and an eigen-oracle on 200
    random matrices up to 50 x 30, inside ten seconds."""
    rng = np.random.default_rng(12345)
    started = time.perf_counter()
    worst_rec = worst_orth = worst_eig = 0.0
    checked_eig = 0
    for i in range(200):
        if i < 50:
            m, n = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        else:
            m, n = int(rng.integers(1, 51)), int(rng.integers(1, 31))
        arr = rng.normal(size=(m, n)) * float(rng.uniform(0.05, 20.0))
        factors = svd(arr)

        scale = max(1.0, float(np.linalg.norm(arr)))
        rec = float(np.linalg.norm(factors.reconstruct() - arr)) / scale
        worst_rec = max(worst_rec, rec)
        assert rec <= 1e-8

        r = factors.rank
        if r:
            orth = max(float(np.max(np.abs(factors.u.T @ factors.u - np.eye(r)))),
                       float(np.max(np.abs(factors.v.T @ factors.v - np.eye(r)))))
            worst_orth = max(worst_orth, orth)
            assert orth <= 1e-8
        assert np.all(np.diff(factors.sigma) <= 0)

        if m <= 8 and n <= 8:
            checked_eig += 1
            eigvals = np.sort(np.linalg.eigvalsh(arr.T @ arr))[::-1]
            eig_scale = max(float(eigvals[0]), 1e-30)
            squared = np.zeros(n)
            squared[:r] = factors.sigma ** 2
            gap = float(np.max(np.abs(squared - np.clip(eigvals, 0.0, None)))) / eig_scale
            worst_eig = max(worst_eig, gap)
            assert gap <= 1e-7

    elapsed = time.perf_counter() - started
    ok = elapsed < 10.0
    _verdict("svd-properties", ok,
             f"200 matrices, rec<= {worst_rec:.1e}, orth<= {worst_orth:.1e}, "
             f"eig<= {worst_eig:.1e} on {checked_eig} small instances, {elapsed:.1f}s")


def test_measure_axioms():
    """Euclidean metric axioms on 1000 random sparse triples plus range,
    symmetry and self-similarity guarantees, inside five seconds."""
    rng = random.Random(2468)
    started = time.perf_counter()
    for i in range(1000):
        a = _random_sparse(rng, f"a{i}")
        b = _random_sparse(rng, f"b{i}")
        c = _random_sparse(rng, f"c{i}")

        dab, dba = euclidean(a, b), euclidean(b, a)
        assert dab >= 0.0
        assert dab == dba
        assert euclidean(a, c) <= dab + euclidean(b, c) + 1e-9
        assert euclidean(a, DocVector("copy", dict(a.weights))) == 0.0
        if a.weights != b.weights:
            assert dab > 0.0

        assert 0.0 <= cosine(a, b) <= 1.0
        assert 0.0 <= jaccard(a, b) <= 1.0
        kl = avg_kl(a, b)
        assert kl >= 0.0
        assert abs(kl - avg_kl(b, a)) < 1e-12
        assert abs(pearson(a, a, m=40) - 1.0) <= 1e-12

    elapsed = time.perf_counter() - started
    ok = elapsed < 5.0
    _verdict("measure-axioms", ok, f"1000 triples, {elapsed:.1f}s")


def test_hand_oracle_values():
    """Spot values computable by hand for the measures, entropy and tf-idf."""
    j = jaccard(DocVector("a", {0: 1.0, 1: 1.0}), DocVector("b", {0: 1.0}))
    p = pearson(DocVector("a", {0: 1.0}), DocVector("b", {1: 1.0}), m=2)
    e = entropy(["A", "A", "A", "B"], 2)
    vocab = Vocabulary(terms=("t",), index={"t": 0}, df=(1,), n_docs=10)
    w = tfidf_vector(TermDocument("d", ("t", "t")), vocab).weights[0]

    ok = (j == pytest.approx(0.5, abs=1e-12)
          and p == pytest.approx(-1.0, abs=1e-12)
          and e == pytest.approx(0.8113, abs=1e-4)
          and w == pytest.approx(4.6052, abs=1e-4))
    _verdict("hand-oracles", ok,
             f"jaccard={j:.4f}, pearson={p:.4f}, entropy={e:.4f}, tfidf={w:.4f}")


BLOCK_TEXT = ("قطار سفينه مطار جسر نفق شاحنه۔ حاسوب شبكه برمجه خادم۔ "
              "قطار قطار سفينه مطار جسر نفق شاحنه۔ حاسوب حاسوب شبكه برمجه خادم۔")
BLOCK_A = {0, 2}
BLOCK_B = {1, 3}


def test_summarizer_topic_coverage():
    """k=2 on a two-block document selects one sentence per block, with an
    identical selection over 100 independent runs."""
    selections = set()
    for _ in range(100):
        doc = RawDocument("d/block", "d", BLOCK_TEXT)
        sentences = split_sentences(doc, default_markers())
        prepared = prepare_sentences(sentences, default_stoplist(), StemmerMode.NONE)
        selections.add(summarize(prepared, 2).selected)

    deterministic = len(selections) == 1
    selected = next(iter(selections))
    covers = len(set(selected) & BLOCK_A) == 1 and len(set(selected) & BLOCK_B) == 1
    _verdict("summary-topic-coverage", deterministic and covers,
             f"selection {sorted(selections)} over 100 runs")


def test_synthetic_clustering_quality(tmp_path):
    """Cosine, jaccard and euclidean reach averaged purity >= 0.95 and
    entropy <= 0.10 on the 3 x 20 blob corpus, inside thirty seconds."""
    corpus = tmp_path / "corpus"
    synth.write_blob_corpus(corpus, seed=1234)
    started = time.perf_counter()
    config = ExperimentConfig(
        corpus_root=corpus,
        representations=("fulltext",),
        stemmers=(StemmerMode.NONE,),
        measures=(MeasureKind.COSINE, MeasureKind.JACCARD, MeasureKind.EUCLIDEAN),
        k=3, runs=5, seed=0,
        output_dir=tmp_path / "out",
    )
    result = run_grid(config)
    elapsed = time.perf_counter() - started

    scores = {row.measure: (row.purity, row.entropy)
              for row in result.rows if row.run == "avg"}
    quality = all(p >= 0.95 and e <= 0.10 for p, e in scores.values())
    ok = not result.failed and len(scores) == 3 and quality and elapsed < 30.0
    detail = ", ".join(f"{m} purity={p:.3f} entropy={e:.3f}" for m, (p, e) in sorted(scores.items()))
    _verdict("synthetic-clustering", ok, f"{detail}, {elapsed:.1f}s")


def test_summary_mode_reduces_entropy_under_noise(tmp_path):
    """With half of each document's sentences injected as noise, summary-mode
    entropy is at or below fulltext entropy for at least 3 of 5 measures."""
    corpus = tmp_path / "corpus"
    synth.write_noisy_sentence_corpus(corpus, seed=2024)
    config = ExperimentConfig(
        corpus_root=corpus,
        representations=("fulltext", "summary"),
        stemmers=(StemmerMode.NONE,),
        measures=tuple(MeasureKind),
        k=3, runs=5, seed=0,
        output_dir=tmp_path / "out",
    )
    result = run_grid(config)

    averaged = {(row.representation, row.measure): row.entropy
                for row in result.rows if row.run == "avg"}
    wins = []
    for kind in MeasureKind:
        fulltext = averaged[("fulltext", kind.value)]
        summary = averaged[("summary", kind.value)]
        wins.append((kind.value, summary <= fulltext, fulltext, summary))

    n_wins = sum(1 for _, win, _, _ in wins if win)
    ok = not result.failed and n_wins >= 3
    detail = ", ".join(f"{name} {'<=' if win else '>'} ({f:.3f} vs {s:.3f})"
                       for name, win, f, s in wins)
    _verdict("noise-trend", ok, f"{n_wins}/5 measures improved: {detail}")


def test_run_determinism(tmp_path):
    """Two CLI runs over the same config and corpus write byte-identical
    results.csv files."""
    corpus = tmp_path / "corpus"
    synth.write_blob_corpus(corpus, docs_per_cat=6, tokens_per_doc=40, seed=77)
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps({
        "corpus_root": str(corpus),
        "representations": ["fulltext", "summary"],
        "stemmers": ["none", "light"],
        "measures": ["cosine", "avgkl"],
        "k": 3, "runs": 2, "seed": 0,
    }), encoding="utf-8")

    first = tmp_path / "out_one"
    second = tmp_path / "out_two"
    code_one = main(["run", "--config", str(config_path), "--output", str(first)])
    code_two = main(["run", "--config", str(config_path), "--output", str(second)])

    bytes_one = (first / "results.csv").read_bytes()
    bytes_two = (second / "results.csv").read_bytes()
    ok = code_one == 0 and code_two == 0 and bytes_one == bytes_two
    _verdict("determinism", ok,
             f"exit codes {code_one}/{code_two}, {len(bytes_one)} bytes each, "
             f"identical={bytes_one == bytes_two}")
