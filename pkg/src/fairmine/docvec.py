"""Sentence vectors in the distributed bag-of-words style.

Each document (here: each sentence) owns one trainable vector that must
predict every token the document contains, through the same
negative-sampling objective the word trainer uses; token order plays no
role.  New sentences are not inferred against a frozen model: the
sentences to be scored are appended to a larger background corpus and
trained jointly with it, which keeps the whole pipeline deterministic
and single pass.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .corpus import Dataset, LabeledSentence, word_lemmas
from .embeddings import (TableMeta, VectorKind, VectorSource, VectorTable,
                         _Vocab, _warn_if_racy, pair_gradients, pair_loss)
from .errors import ConfigError, DataError

logger = logging.getLogger(__name__)

#: Background sentences are tagged bg-000000, bg-000001, ...
BACKGROUND_ID_FORMAT = "bg-{:06d}"


@dataclass(frozen=True)
class DocvecConfig:
    """Sentence-vector trainer settings (no window: whole-document bag).

    ``workers`` has the same meaning as in the word trainer: 1 is the
    deterministic mode; higher values merely declare tolerance for racy
    updates, which this implementation does not perform.
    """

    dim: int = 100
    negatives: int = 10
    epochs: int = 20
    initial_lr: float = 0.025
    min_lr: float = 1e-4
    min_count: int = 2
    rng_seed: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ConfigError(f"dim must be positive, got {self.dim}")
        if self.negatives < 1:
            raise ConfigError(f"negatives must be positive, got {self.negatives}")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be positive, got {self.epochs}")
        if not 0 < self.min_lr <= self.initial_lr:
            raise ConfigError("need 0 < min_lr <= initial_lr")
        if self.min_count < 1:
            raise ConfigError(f"min_count must be positive, got {self.min_count}")
        if self.workers < 1:
            raise ConfigError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True)
class DocVectorTable:
    """Trained document vectors plus the shared word output weights."""

    docs: VectorTable
    word_output: VectorTable

    @property
    def dim(self) -> int:
        return self.docs.dim


def doc_vector(table: DocVectorTable, doc_id: str) -> np.ndarray:
    """The trained vector for ``doc_id``; unknown ids are an error."""
    vec = table.docs.get(doc_id)
    if vec is None:
        raise DataError(f"no document vector for id {doc_id!r}")
    return vec


def tagged_corpus(background: Sequence[str],
                  targets: Iterable[LabeledSentence],
                  ) -> list[tuple[str, list[str]]]:
    """Join background text and target sentences into one tagged corpus.

    Background lines get synthetic ids (``bg-000000``, ...); target
    sentences keep their own ids, which therefore may not collide with
    the synthetic range.
    """
    docs = [(BACKGROUND_ID_FORMAT.format(i), word_lemmas(line))
            for i, line in enumerate(background)]
    synthetic = {doc_id for doc_id, _ in docs}
    for sentence in targets:
        if sentence.id in synthetic:
            raise DataError(
                f"sentence id {sentence.id!r} collides with a background tag")
        docs.append((sentence.id, word_lemmas(sentence.text)))
    return docs


def train_pvdbow(background: Sequence[str],
                 targets: Union[Dataset, Sequence[LabeledSentence]],
                 cfg: DocvecConfig = DocvecConfig(),
                 on_epoch: Optional[Callable[[int, float], None]] = None,
                 ) -> DocVectorTable:
    """Train one vector per background line and per target sentence.

    Every document id appears in the result, including documents whose
    tokens all fell below ``min_count`` (their vectors simply keep their
    small random initialization).  Deterministic for a fixed corpus,
    config and seed.
    """
    target_list = list(targets)
    if not background:
        raise DataError("background corpus is empty")
    if not target_list:
        raise DataError("no target sentences to train vectors for")
    target_ids = [s.id for s in target_list]
    if len(set(target_ids)) != len(target_ids):
        dupes = sorted({d for d in target_ids if target_ids.count(d) > 1})
        raise DataError(f"duplicate target sentence ids: {dupes[:5]}")
    docs = tagged_corpus(background, target_list)

    counts: Counter = Counter()
    for _, tokens in docs:
        counts.update(tokens)
    vocab = _Vocab(counts, cfg.min_count)
    if len(vocab) < 2:
        raise DataError("vocabulary has fewer than 2 tokens; "
                        "negative sampling needs alternatives")
    _warn_if_racy(cfg.workers)
    encoded = [[vocab.index[t] for t in tokens if t in vocab.index]
               for _, tokens in docs]
    retained = sum(len(tokens) for tokens in encoded)
    total_steps = cfg.epochs * retained
    if total_steps == 0:
        raise DataError("every document token fell below min_count")

    rng = np.random.default_rng(cfg.rng_seed)
    doc_vecs = (rng.random((len(docs), cfg.dim)) - 0.5) / cfg.dim
    w_out = np.zeros((len(vocab), cfg.dim))

    lr_span = cfg.initial_lr - cfg.min_lr
    step = 0
    for epoch in range(cfg.epochs):
        epoch_loss = 0.0
        for d, tokens in enumerate(encoded):
            for idx in tokens:
                step += 1
                alpha = cfg.min_lr + lr_span * max(0.0, 1.0 - step / total_steps)
                negs = vocab.draw_negatives(rng, cfg.negatives, idx)
                rows = np.concatenate(([idx], negs))
                labels = np.zeros(len(rows))
                labels[0] = 1.0
                epoch_loss += pair_loss(doc_vecs[d], w_out[rows], labels)
                grad_v, grad_u = pair_gradients(doc_vecs[d], w_out[rows], labels)
                np.add.at(w_out, rows, -alpha * grad_u)
                doc_vecs[d] -= alpha * grad_v
        mean_loss = epoch_loss / retained
        logger.info("epoch %d/%d: mean pair loss %.6f",
                    epoch + 1, cfg.epochs, mean_loss)
        if on_epoch is not None:
            on_epoch(epoch, mean_loss)
    logger.info("trained %d sentence vectors of dim %d over %d tokens "
                "(%d epochs)", len(docs), cfg.dim, retained, cfg.epochs)
    meta = TableMeta(kind=VectorKind.DOC, source=VectorSource.TRAINED)
    doc_table = VectorTable(
        {doc_id: doc_vecs[i] for i, (doc_id, _) in enumerate(docs)}, meta=meta)
    out_table = VectorTable(
        {w: w_out[i] for i, w in enumerate(vocab.words)},
        meta=TableMeta(kind=VectorKind.WORD, source=VectorSource.TRAINED))
    return DocVectorTable(docs=doc_table, word_output=out_table)
