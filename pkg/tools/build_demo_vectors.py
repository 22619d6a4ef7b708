#!/usr/bin/env python3
"""Regenerate the bundled word- and sense-vector tables.

These tables stand in for embeddings trained on a large background
corpus, which would be far too big to bundle.  They are constructed, not
trained: each vector is a unit vector whose cosine against the relevant
seed is set explicitly, so the bundled classifier behaves the way a
well-trained model does, with margins that survive the %.6g text format.

Geometry: an orthonormal basis is drawn once; the five seed words get
correlated combinations of the first few basis vectors, every related
word is ``c * anchor + sqrt(1 - c^2) * fresh_basis_vector`` (cosine to
its anchor exactly ``c``), and every other word in the bundled dataset's
vocabulary gets a direction almost orthogonal to all seeds (|cosine|
below 0.25).  "discriminatory" is stored as an exact copy of
"discriminate", so the two compare at exactly 1.0.

The sense table mirrors the word table with lemma|POS keys, with two
deliberate differences that degrade it slightly, in the spirit of a
sense model trained without context windows: "employment|NOUN" sits at
0.55 to the seeds (a contextless near-miss that costs precision below
threshold 0.6), and several supporting words sit lower than their
word-table counterparts.

After writing both files the script rescores the bundled gold dataset
and asserts the decision-relevant margins, so a drifted edit here fails
loudly instead of silently weakening the shipped behavior.

Run from the repository root:

    python3 tools/build_demo_vectors.py
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from fairmine.classify import (  # noqa: E402
    DEFAULT_SEED_SENSE_KEYS,
    DEFAULT_SEED_WORDS,
    SenseVectorScorer,
    WordVectorScorer,
    score_dataset,
)
from fairmine.corpus import Label, tokenize_dataset  # noqa: E402
from fairmine.embeddings import (  # noqa: E402
    TableMeta,
    VectorKind,
    VectorSource,
    VectorTable,
    load_vectors,
    save_vectors,
    sense_key,
)
from fairmine.evaluate import DEFAULT_GRID, sweep  # noqa: E402
from fairmine.resources import load_gold_dataset, load_miniwn  # noqa: E402

DIM = 64
WORDS_OUT = REPO / "src" / "fairmine" / "resources" / "vectors_words.txt"
SENSES_OUT = REPO / "src" / "fairmine" / "resources" / "vectors_senses.txt"

# Related words: word -> (anchor seed word, cosine).  Values at or above
# 0.4 mark a sentence at the word-vector operating threshold; the band
# just below (equal, legal, treatment, ...) exists so near-miss scoring
# is visible in reports without flipping any label.
WORD_CLUSTER = {
    "segregate": ("discriminate", 0.50),
    "segregation": ("discrimination", 0.52),
    "equality": ("justice", 0.55),
    "impartiality": ("justice", 0.50),
    "equitable": ("fairness", 0.50),
    "preferential": ("bias", 0.45),
    "preference": ("bias", 0.45),
    "prejudice": ("bias", 0.60),
    "racism": ("discrimination", 0.58),
    "sexism": ("discrimination", 0.58),
    "injustice": ("justice", 0.55),
    "unfairness": ("fairness", 0.50),
    "civil": ("discrimination", 0.42),
    "equal": ("justice", 0.35),
    "legal": ("justice", 0.38),
    "unlawful": ("justice", 0.30),
    "treatment": ("discrimination", 0.33),
    "practice": ("discrimination", 0.28),
}

# Sense-table counterpart, keyed by lemma|POS.  employment|NOUN is the
# engineered precision trap; the 0.62 band keeps recall on segregation
# and equality wording at the 0.6 threshold.
SENSE_CLUSTER = {
    "segregate|VERB": ("discriminate|VERB", 0.62),
    "segregation|NOUN": ("discrimination|NOUN", 0.62),
    "equality|NOUN": ("justice|NOUN", 0.62),
    "impartiality|NOUN": ("justice|NOUN", 0.62),
    "discriminatory|ADJ": ("discriminate|VERB", 0.62),
    "equitable|ADJ": ("fairness|NOUN", 0.45),
    "preferential|ADJ": ("bias|NOUN", 0.45),
    "preference|NOUN": ("bias|NOUN", 0.45),
    "prejudice|NOUN": ("bias|NOUN", 0.58),
    "injustice|NOUN": ("justice|NOUN", 0.50),
    "employment|NOUN": ("discrimination|NOUN", 0.55),
    "civil|ADJ": ("discrimination|NOUN", 0.30),
    "equal|ADJ": ("justice|NOUN", 0.30),
    "legal|ADJ": ("justice|NOUN", 0.33),
    "treatment|NOUN": ("discrimination|NOUN", 0.30),
    "practice|NOUN": ("discrimination|NOUN", 0.25),
}

EXPECTED_WORDVEC_MISSES = {
    "seed-3", "seed-4", "f-08", "f-17", "f-19", "f-20", "f-27", "f-35",
}


def _seed_directions(basis: np.ndarray) -> dict[str, np.ndarray]:
    """Five correlated unit vectors spanning the first five basis rows."""
    q = basis
    seeds = {
        "discriminate": q[0],
        "discrimination": 0.8 * q[0] + 0.6 * q[1],
        "justice": q[2],
        "fairness": 0.6 * q[2] + 0.8 * q[3],
        "bias": 0.45 * q[0] + 0.25 * q[2] + np.sqrt(1 - 0.45**2 - 0.25**2) * q[4],
    }
    return {w: v / np.linalg.norm(v) for w, v in seeds.items()}


def _build_table(seed_keys, cluster, neutral_keys, rng_seed):
    rng = np.random.default_rng(rng_seed)
    basis, _ = np.linalg.qr(rng.standard_normal((DIM, DIM)))
    basis = basis.T  # rows are orthonormal
    directions = _seed_directions(basis)
    # A seed key is the seed word itself or "word|POS"; map each to its
    # direction by the word part so any declared seed order works.
    anchors = {key: directions[key.split("|")[0]] for key in seed_keys}

    vectors: dict[str, np.ndarray] = dict(anchors)
    next_free = 5
    for key, (anchor_key, c) in cluster.items():
        residual = basis[next_free]  # orthogonal to every seed direction
        next_free += 1
        vectors[key] = c * anchors[anchor_key] + np.sqrt(1 - c * c) * residual

    seed_subspace = basis[:5]  # orthonormal rows spanning all seeds
    seed_matrix = np.stack([anchors[k] for k in seed_keys])
    for key in sorted(neutral_keys):
        if key in vectors:
            continue
        g = rng.standard_normal(DIM)
        g -= seed_subspace.T @ (seed_subspace @ g)
        g /= np.linalg.norm(g)
        # A small in-subspace leak keeps seed cosines nonzero but under
        # 0.22: the leak direction is unit, g is orthogonal to it.
        eps = rng.uniform(0.03, 0.22)
        leak = seed_matrix.T @ rng.standard_normal(5)
        leak /= np.linalg.norm(leak)
        vectors[key] = np.sqrt(1 - eps * eps) * g + eps * leak
    return vectors


def _check(direction: str, got: float, want: float) -> None:
    assert abs(got - want) < 1e-5, (direction, got, want)


def main() -> int:
    wn = load_miniwn()
    gold = tokenize_dataset(load_gold_dataset(), wn)

    word_vocab = set()
    sense_vocab = set()
    for sentence in gold:
        for token in sentence.tokens:
            if token.is_content:
                word_vocab.add(token.lemma)
                sense_vocab.add(sense_key(token))

    # ----- word table -------------------------------------------------
    word_vectors = _build_table(DEFAULT_SEED_WORDS, WORD_CLUSTER,
                                word_vocab, rng_seed=20240817)
    word_vectors["discriminatory"] = word_vectors["discriminate"]
    table = VectorTable(word_vectors,
                        TableMeta(kind=VectorKind.WORD, source=VectorSource.LOADED))
    save_vectors(table, WORDS_OUT)

    # ----- sense table ------------------------------------------------
    sense_vectors = _build_table(DEFAULT_SEED_SENSE_KEYS, SENSE_CLUSTER,
                                 sense_vocab, rng_seed=20240818)
    sense_table = VectorTable(sense_vectors,
                              TableMeta(kind=VectorKind.SENSE, source=VectorSource.LOADED))
    save_vectors(sense_table, SENSES_OUT)

    # ----- verify the written artifacts --------------------------------
    words = load_vectors(WORDS_OUT, VectorKind.WORD)
    senses = load_vectors(SENSES_OUT, VectorKind.SENSE)
    print(f"wrote {len(words)} word vectors to {WORDS_OUT}")
    print(f"wrote {len(senses)} sense vectors to {SENSES_OUT}")

    labels = {s.id: s.label for s in gold}

    word_scores = score_dataset(WordVectorScorer(vectors=words), gold)
    by_id = {s.id: s.score for s in word_scores}
    import re
    stem = re.compile(r"discriminat[a-z]*", re.IGNORECASE)
    for s in gold:
        if stem.search(s.text):
            assert by_id[s.id] == 1.0, (s.id, by_id[s.id])
        if labels[s.id] is Label.NON_FAIR:
            assert by_id[s.id] < 0.4, (s.id, by_id[s.id])
    misses = {s.id for s in gold
              if labels[s.id] is Label.FAIR and by_id[s.id] < 0.4}
    assert misses == EXPECTED_WORDVEC_MISSES, misses

    rep = sweep(word_scores, gold, DEFAULT_GRID)
    print("\nword-vector sweep:")
    for e in rep.entries:
        c = e.confusion
        print(f"  t={e.threshold:.1f} tp={c.tp:2d} fp={c.fp:2d} fn={c.fn:2d} "
              f"tn={c.tn:2d} F1={e.metrics.f1:.4f}")
    assert rep.best_entry.threshold == 0.4, rep.best_entry
    assert rep.best_entry.metrics.f1 > 0.5
    print(f"  best t=0.4 F1={rep.best_entry.metrics.f1:.4f} "
          f"AUC={rep.roc_fair.auc:.4f}")

    sense_scores = score_dataset(SenseVectorScorer(vectors=senses), gold)
    for s in sense_scores:
        if labels[s.id] is Label.NON_FAIR:
            assert s.score < 0.6, (s.id, s.score)
    rep_s = sweep(sense_scores, gold, DEFAULT_GRID)
    print("\nsense-vector sweep:")
    for e in rep_s.entries:
        c = e.confusion
        print(f"  t={e.threshold:.1f} tp={c.tp:2d} fp={c.fp:2d} fn={c.fn:2d} "
              f"tn={c.tn:2d} F1={e.metrics.f1:.4f}")
    assert rep_s.best_entry.threshold == 0.6, rep_s.best_entry
    print(f"  best t=0.6 F1={rep_s.best_entry.metrics.f1:.4f} "
          f"AUC={rep_s.roc_fair.auc:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
