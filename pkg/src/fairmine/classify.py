"""Sentence scoring backends and threshold classification.

Every backend reduces a sentence to a single relatedness score against a
small seed set, and a sentence is labeled fair exactly when its score
reaches the decision threshold.  The backends differ only in what they
compare:

* ``classical``   - taxonomy similarity between word senses and seed senses;
* ``wordvec``     - cosine between word vectors and seed word vectors
  (negative cosines clamp to 0, keeping scores on [0, 1]);
* ``sensevec``    - the same, over lemma|pos sense keys;
* ``docvec``      - cosine between whole-sentence vectors and the seed
  sentences' vectors (scores live on [-1, 1]).

Scores do not depend on the threshold, so sweeping thresholds never
rescores; see :func:`apply_threshold`.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Protocol, Sequence, Union

from .corpus import Dataset, Label, LabeledSentence, Token, annotate, tokenize
from .docvec import DocVectorTable
from .embeddings import VectorTable, cosine, sense_key
from .errors import ConfigError, DataError, ResourceError
from .wordnet import SeedSenseSet, WordnetGraph, word_seed_similarity

logger = logging.getLogger(__name__)


class Backend(enum.Enum):
    CLASSICAL = "classical"
    WORDVEC = "wordvec"
    SENSEVEC = "sensevec"
    DOCVEC = "docvec"


#: Seed words for the word-vector backend.
DEFAULT_SEED_WORDS = ("discriminate", "fairness", "discrimination",
                      "justice", "bias")
#: Seed keys for the sense-vector backend (lemma|POS).
DEFAULT_SEED_SENSE_KEYS = ("discriminate|VERB", "fairness|NOUN",
                           "discrimination|NOUN", "justice|NOUN", "bias|NOUN")
#: Seed sentence ids for the sentence-vector backend.
DEFAULT_SEED_DOC_IDS = ("seed-1", "seed-2", "seed-3", "seed-4", "seed-5")

DEFAULT_THRESHOLD = 0.5


def validate_threshold(backend: Backend, threshold: float) -> None:
    """Check a decision threshold against the backend's score range.

    Word-level scores live on [0, 1] and sentence-vector scores on
    [-1, 1]; a threshold at or beyond either end would pin the decision,
    so the bounds are exclusive.
    """
    if backend is Backend.DOCVEC:
        if not -1.0 < threshold < 1.0:
            raise ConfigError(
                f"docvec threshold must be in (-1, 1), got {threshold}")
    elif not 0.0 < threshold < 1.0:
        raise ConfigError(
            f"{backend.value} threshold must be in (0, 1), got {threshold}")


@dataclass(frozen=True)
class ClassifierConfig:
    """A backend choice plus its decision threshold."""

    backend: Backend
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        validate_threshold(self.backend, self.threshold)


@dataclass(frozen=True)
class SentenceScore:
    """One sentence's score and the (token, seed) pair that produced it."""

    id: str
    score: float
    best_word: Optional[str] = None
    best_seed: Optional[str] = None


@dataclass(frozen=True)
class ScoredSentence(SentenceScore):
    """A sentence score plus the label a threshold assigned to it."""

    label_pred: Label = field(kw_only=True)


class SentenceScorer(Protocol):
    backend: Backend

    def score(self, sentence: LabeledSentence
              ) -> tuple[float, Optional[str], Optional[str]]:
        """Return (score, best_word, best_seed) for one sentence."""
        ...


def _content_tokens(sentence: LabeledSentence) -> list[Token]:
    tokens = sentence.tokens or tuple(tokenize(sentence.text))
    return [t for t in tokens if t.is_content]


class ClassicalScorer:
    """Taxonomy-similarity backend over a seed sense set."""

    backend = Backend.CLASSICAL

    def __init__(self, wn: WordnetGraph, seeds: SeedSenseSet):
        for sid in seeds.senses:
            if sid not in wn:
                raise ConfigError(f"seed sense {sid} is not in the database")
        self._wn = wn
        self._seeds = seeds

    def score(self, sentence: LabeledSentence):
        tokens = sentence.tokens or tuple(annotate(tokenize(sentence.text),
                                                   self._wn))
        best = 0.0
        best_word: Optional[str] = None
        best_seed: Optional[str] = None
        for token in tokens:
            if not token.is_content:
                continue
            score, seed = word_seed_similarity(token, self._seeds, self._wn)
            if score > best:
                best = score
                best_word = token.lemma
                best_seed = str(seed) if seed is not None else None
        return best, best_word, best_seed


class WordVectorScorer:
    """Word-vector backend: best clamped cosine over (token, seed word)."""

    backend = Backend.WORDVEC

    def __init__(self, vectors: VectorTable,
                 seed_words: Sequence[str] = DEFAULT_SEED_WORDS):
        if not seed_words:
            raise ConfigError("no seed words given")
        available = [w for w in seed_words if w in vectors]
        dropped = [w for w in seed_words if w not in vectors]
        if dropped:
            logger.warning("seed words without vectors are ignored: %s",
                           ", ".join(dropped))
        if not available:
            raise ConfigError("none of the seed words has a vector")
        self._vectors = vectors
        self._seeds = [(w, vectors.get(w)) for w in available]

    def _key(self, token: Token) -> str:
        return token.lemma

    def score(self, sentence: LabeledSentence):
        best = 0.0
        best_word: Optional[str] = None
        best_seed: Optional[str] = None
        for token in _content_tokens(sentence):
            key = self._key(token)
            vec = self._vectors.get(key)
            if vec is None:
                continue
            for seed_word, seed_vec in self._seeds:
                score = max(0.0, cosine(vec, seed_vec))
                if score > best:
                    best = score
                    best_word = key
                    best_seed = seed_word
        return best, best_word, best_seed


class SenseVectorScorer(WordVectorScorer):
    """Like the word-vector backend, but keyed by lemma|pos sense keys.

    Sentences must be POS-annotated (or will be keyed by OTHER), so
    callers normally tokenize the dataset against the lexicon first.
    """

    backend = Backend.SENSEVEC

    def __init__(self, vectors: VectorTable,
                 seed_keys: Sequence[str] = DEFAULT_SEED_SENSE_KEYS):
        super().__init__(vectors, seed_keys)

    def _key(self, token: Token) -> str:
        return sense_key(token)


class DocVectorScorer:
    """Sentence-vector backend: best cosine against the seed sentences.

    All sentences must have been trained jointly, so both the seed ids
    and every scored sentence id must be present in the table.
    """

    backend = Backend.DOCVEC

    def __init__(self, vectors: Union[VectorTable, DocVectorTable],
                 seed_ids: Sequence[str] = DEFAULT_SEED_DOC_IDS):
        if not isinstance(vectors, VectorTable):
            vectors = vectors.docs
        if not seed_ids:
            raise ConfigError("no seed sentence ids given")
        for doc_id in seed_ids:
            if doc_id not in vectors:
                raise ConfigError(
                    f"seed sentence {doc_id!r} has no trained vector")
        self._vectors = vectors
        self._seed_ids = list(seed_ids)

    def score(self, sentence: LabeledSentence):
        vec = self._vectors.get(sentence.id)
        if vec is None:
            raise DataError(
                f"sentence {sentence.id!r} has no trained vector; train the "
                f"sentence vectors over the dataset being scored")
        best: Optional[float] = None
        best_seed: Optional[str] = None
        for seed_id in self._seed_ids:
            score = cosine(vec, self._vectors.get(seed_id))
            if best is None or score > best:
                best = score
                best_seed = seed_id
        return best, None, best_seed


def make_scorer(backend: Backend, *, wn: Optional[WordnetGraph] = None,
                seeds: Optional[SeedSenseSet] = None,
                vectors: Optional[Union[VectorTable, DocVectorTable]] = None,
                seed_words: Optional[Sequence[str]] = None,
                seed_doc_ids: Optional[Sequence[str]] = None) -> SentenceScorer:
    """Build the scorer for ``backend`` from whichever inputs it needs."""
    if backend is Backend.CLASSICAL:
        if wn is None or seeds is None:
            raise ConfigError("the classical backend needs a database "
                              "directory and a seed sense set")
        return ClassicalScorer(wn, seeds)
    if backend is Backend.WORDVEC:
        if vectors is None:
            raise ConfigError("the wordvec backend needs a vector table")
        return WordVectorScorer(vectors, seed_words or DEFAULT_SEED_WORDS)
    if backend is Backend.SENSEVEC:
        if vectors is None:
            raise ConfigError("the sensevec backend needs a vector table")
        return SenseVectorScorer(vectors, seed_words or DEFAULT_SEED_SENSE_KEYS)
    if backend is Backend.DOCVEC:
        if vectors is None:
            raise ConfigError("the docvec backend needs a vector table")
        return DocVectorScorer(vectors, seed_doc_ids or DEFAULT_SEED_DOC_IDS)
    raise ConfigError(f"unknown backend {backend!r}")


def score_dataset(scorer: SentenceScorer, ds: Dataset,
                  workers: int = 1) -> list[SentenceScore]:
    """Score every sentence, preserving dataset order.

    Scoring is pure over immutable resources, so ``workers > 1`` fans
    out over a thread pool; the collected result equals the sequential
    run exactly.
    """
    if workers < 1:
        raise ConfigError(f"workers must be positive, got {workers}")
    if workers == 1 or len(ds) < 2:
        raw = [scorer.score(s) for s in ds]
    else:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(scorer.score, ds.sentences))
    return [SentenceScore(id=sentence.id, score=score,
                          best_word=best_word, best_seed=best_seed)
            for sentence, (score, best_word, best_seed) in zip(ds, raw)]


def apply_threshold(scores: Sequence[SentenceScore],
                    threshold: float) -> list[ScoredSentence]:
    """Label already-computed scores: fair exactly when score >= threshold."""
    if not -1.0 <= threshold <= 1.0:
        raise ConfigError(f"threshold must be in [-1, 1], got {threshold}")
    return [ScoredSentence(id=s.id, score=s.score, best_word=s.best_word,
                           best_seed=s.best_seed,
                           label_pred=(Label.FAIR if s.score >= threshold
                                       else Label.NON_FAIR))
            for s in scores]


def classify_dataset(scorer: SentenceScorer, ds: Dataset,
                     threshold: float = DEFAULT_THRESHOLD,
                     workers: int = 1) -> list[ScoredSentence]:
    """Score every sentence; fair exactly when ``score >= threshold``."""
    validate_threshold(scorer.backend, threshold)
    return apply_threshold(score_dataset(scorer, ds, workers=workers),
                           threshold)


def save_scores(scored: Sequence[ScoredSentence], path) -> None:
    """Write a score report as JSON lines (fixed key order)."""
    lines = []
    for s in scored:
        record = {"id": s.id, "score": s.score,
                  "label_pred": s.label_pred.value,
                  "best_word": s.best_word, "best_seed": s.best_seed}
        lines.append(json.dumps(record, ensure_ascii=False))
    Path(path).write_text("".join(line + "\n" for line in lines),
                          encoding="utf-8")


def load_scores(path) -> list[ScoredSentence]:
    """Read a score report written by :func:`save_scores`."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot read score report {path}: {exc}") from exc
    out = []
    for lineno, line in enumerate(raw.splitlines(), 1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            out.append(ScoredSentence(
                id=record["id"], score=float(record["score"]),
                label_pred=Label(record["label_pred"]),
                best_word=record.get("best_word"),
                best_seed=record.get("best_seed")))
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"{path}:{lineno}: bad score record ({exc})") from exc
    return out
