"""Word vectors: training, file I/O and cosine scoring.

The trainer is a compact skip-gram with negative sampling, single
threaded on purpose: given the same corpus, configuration and seed it
reproduces its output bit for bit, which the larger pipeline relies on
for cached artifacts.  The moving parts follow the standard recipe:

* vocabulary keeps tokens seen at least ``min_count`` times, ordered by
  descending count (ties alphabetically);
* negative samples are drawn from the unigram distribution raised to
  0.75, redrawing any sample that hits the positive context;
* the effective window radius for each center token is uniform on
  ``1..window``;
* frequent tokens are dropped with the usual ``sqrt(t/f) + t/f`` keep
  probability before windows are formed;
* the learning rate decays linearly from ``initial_lr`` to ``min_lr``
  across ``epochs * retained_tokens`` token visits.

``pair_loss`` and ``pair_gradients`` expose the exact objective the
update rule descends, so the arithmetic can be checked against finite
differences; the sentence-vector trainer reuses them.
"""

from __future__ import annotations

import enum
import logging
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from .corpus import Token
from .errors import ConfigError, DataError, ResourceError

logger = logging.getLogger(__name__)


# -- vector tables -----------------------------------------------------------


class VectorKind(enum.Enum):
    WORD = "word"
    SENSE = "sense"
    DOC = "doc"


class VectorSource(enum.Enum):
    TRAINED = "trained"
    LOADED = "loaded"


@dataclass(frozen=True)
class TableMeta:
    kind: VectorKind = VectorKind.WORD
    source: VectorSource = VectorSource.LOADED


class VectorTable:
    """An ordered, immutable mapping from string keys to float64 vectors."""

    def __init__(self, vectors: Mapping[str, np.ndarray],
                 meta: TableMeta = TableMeta()):
        if not vectors:
            raise DataError("vector table has no entries")
        self.meta = meta
        self._vectors: dict[str, np.ndarray] = {}
        self._dim: Optional[int] = None
        for key, vec in vectors.items():
            if not key or any(c.isspace() for c in key):
                raise DataError(f"invalid vector key {key!r}")
            arr = np.asarray(vec, dtype=np.float64)
            if arr.ndim != 1 or arr.shape[0] < 1:
                raise DataError(f"vector for {key!r} is not a real vector")
            if self._dim is None:
                self._dim = arr.shape[0]
            elif arr.shape[0] != self._dim:
                raise DataError(
                    f"vector for {key!r} has {arr.shape[0]} values, "
                    f"expected {self._dim}")
            arr = arr.copy()
            arr.flags.writeable = False
            self._vectors[key] = arr

    @property
    def dim(self) -> int:
        assert self._dim is not None  # constructor rejects empty tables
        return self._dim

    def get(self, key: str) -> Optional[np.ndarray]:
        return self._vectors.get(key)

    def __contains__(self, key: str) -> bool:
        return key in self._vectors

    def __len__(self) -> int:
        return len(self._vectors)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vectors)

    def items(self) -> Iterable[tuple[str, np.ndarray]]:
        return self._vectors.items()


def load_vectors(path, kind: VectorKind = VectorKind.WORD) -> VectorTable:
    """Read a plain-text vector table.

    Each line is ``key v1 ... vd``.  A leading ``count dim`` header line
    (exactly two integer tokens) is accepted and checked.  A repeated key
    keeps its first vector (with a warning); dimension problems raise
    :class:`DataError` naming the line.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot read vector file {path}: {exc}") from exc
    lines = [(n, line) for n, line in enumerate(raw.splitlines(), 1) if line.strip()]
    declared: Optional[tuple[int, int]] = None
    if lines:
        first_fields = lines[0][1].split()
        if len(first_fields) == 2:
            try:
                declared = (int(first_fields[0]), int(first_fields[1]))
                lines = lines[1:]
            except ValueError:
                declared = None
    if not lines:
        raise DataError(f"{path}: no vectors")
    vectors: dict[str, np.ndarray] = {}
    dim: Optional[int] = None
    if declared:
        dim = declared[1]
    for lineno, line in lines:
        fields = line.split()
        key = fields[0]
        if key in vectors:
            logger.warning("%s:%d: duplicate key %r, keeping the first",
                           path, lineno, key)
            continue
        try:
            values = np.array([float(v) for v in fields[1:]], dtype=np.float64)
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: bad number ({exc})") from exc
        if dim is None:
            dim = len(values)
            if dim == 0:
                raise DataError(f"{path}:{lineno}: vector has no values")
        if len(values) != dim:
            raise DataError(
                f"{path}:{lineno}: expected {dim} values, got {len(values)}")
        vectors[key] = values
    if declared and declared[0] != len(vectors):
        raise DataError(
            f"{path}: header declares {declared[0]} vectors, file has "
            f"{len(vectors)}")
    return VectorTable(vectors, meta=TableMeta(kind=kind,
                                               source=VectorSource.LOADED))


def save_vectors(table: VectorTable, path) -> None:
    """Write a table in the plain-text format (no header, %.6g values)."""
    lines = []
    for key, vec in table.items():
        lines.append(key + " " + " ".join(f"{v:.6g}" for v in vec))
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity, clamped to [-1, 1].

    Equal vectors score exactly 1.0 (no rounding residue); a zero vector
    has no direction, so any comparison with it scores 0.0.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if not np.any(u) or not np.any(v):
        logger.debug("cosine against a zero vector, scoring 0.0")
        return 0.0
    if u is v or np.array_equal(u, v):
        return 1.0
    denom = float(np.linalg.norm(u)) * float(np.linalg.norm(v))
    value = float(np.dot(u, v)) / denom
    return max(-1.0, min(1.0, value))


# -- sense keys --------------------------------------------------------------


def sense_key(token: Token) -> str:
    """Key a token by lemma and primary POS, e.g. ``discrimination|NOUN``.

    The primary POS is the highest-priority member of the token's POS set
    (noun before verb before adjective before adverb; OTHER last).
    """
    primary = min(token.pos_set, key=lambda p: p.order)
    return f"{token.lemma}|{primary.name}"


# -- the skip-gram objective -------------------------------------------------


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def pair_loss(v: np.ndarray, u: np.ndarray, labels: np.ndarray) -> float:
    """Negative-sampling loss for one center/context event.

    ``v`` is the input vector, ``u`` the stacked output vectors (positive
    context first, then the negative samples) and ``labels`` their 1/0
    targets.  The loss is ``-log sigma(u_pos . v) - sum log sigma(-u_neg . v)``.
    """
    scores = u @ v
    # log sigma(s) = -log1p(exp(-s)) computed stably on both branches
    logsig = np.where(scores >= 0,
                      -np.log1p(np.exp(-np.abs(scores))),
                      scores - np.log1p(np.exp(-np.abs(scores))))
    loss = -np.sum(np.where(labels == 1, logsig, logsig - scores))
    return float(loss)


def pair_gradients(v: np.ndarray, u: np.ndarray,
                   labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Gradients of :func:`pair_loss` with respect to ``v`` and ``u``."""
    scores = u @ v
    g = _sigmoid(scores) - labels  # d loss / d score
    grad_v = u.T @ g
    grad_u = np.outer(g, v)
    return grad_v, grad_u


# -- training ----------------------------------------------------------------


@dataclass(frozen=True)
class SgnsConfig:
    """Skip-gram trainer settings.

    ``workers`` selects the update mode: 1 is the single-threaded
    deterministic mode the reproducibility contract depends on; values
    above 1 declare that unsynchronized updates would be acceptable.
    This implementation always updates sequentially (see the trainer).
    """

    dim: int = 100
    window: int = 5
    negatives: int = 10
    epochs: int = 20
    initial_lr: float = 0.025
    min_lr: float = 1e-4
    min_count: int = 2
    subsample_t: float = 1e-4
    rng_seed: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ConfigError(f"dim must be positive, got {self.dim}")
        if self.window < 1:
            raise ConfigError(f"window must be positive, got {self.window}")
        if self.negatives < 1:
            raise ConfigError(f"negatives must be positive, got {self.negatives}")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be positive, got {self.epochs}")
        if not 0 < self.min_lr <= self.initial_lr:
            raise ConfigError("need 0 < min_lr <= initial_lr")
        if self.min_count < 1:
            raise ConfigError(f"min_count must be positive, got {self.min_count}")
        if self.subsample_t < 0:
            raise ConfigError(
                f"subsample_t may not be negative, got {self.subsample_t}")
        if self.workers < 1:
            raise ConfigError(f"workers must be positive, got {self.workers}")


class _Vocab:
    """Count-ordered vocabulary with a 0.75-power noise distribution."""

    def __init__(self, counts: Counter, min_count: int):
        kept = [(w, c) for w, c in counts.items() if c >= min_count]
        kept.sort(key=lambda wc: (-wc[1], wc[0]))
        if not kept:
            raise DataError(
                f"no token appears at least {min_count} times; nothing to train")
        self.words = [w for w, _ in kept]
        self.index = {w: i for i, w in enumerate(self.words)}
        self.counts = np.array([c for _, c in kept], dtype=np.float64)
        self.total = float(self.counts.sum())
        noise = self.counts ** 0.75
        self.noise_cum = np.cumsum(noise)
        self.noise_total = float(self.noise_cum[-1])

    def __len__(self) -> int:
        return len(self.words)

    def draw_negatives(self, rng: np.random.Generator, k: int,
                       forbidden: int) -> np.ndarray:
        draws = np.searchsorted(self.noise_cum,
                                rng.random(k) * self.noise_total, side="right")
        for j in range(k):
            while draws[j] == forbidden:
                draws[j] = np.searchsorted(
                    self.noise_cum, rng.random() * self.noise_total, side="right")
        return draws


def _keep_probability(count: float, total: float, subsample_t: float) -> float:
    if subsample_t <= 0:
        return 1.0
    f = count / total
    return min(1.0, math.sqrt(subsample_t / f) + subsample_t / f)


def _warn_if_racy(workers: int) -> None:
    if workers > 1:
        logger.warning("workers=%d requests unsynchronized updates; this "
                       "implementation always trains sequentially, so the "
                       "run stays deterministic", workers)


def train_sgns(corpus: Sequence[Sequence[str]],
               cfg: SgnsConfig = SgnsConfig(),
               kind: VectorKind = VectorKind.WORD,
               on_epoch: Optional[Callable[[int, float], None]] = None,
               ) -> VectorTable:
    """Train skip-gram vectors with negative sampling over token lists.

    ``corpus`` holds plain token strings; callers choose the keying
    (lemmas for word vectors, lemma|POS keys for sense vectors).  The
    result maps each vocabulary token to its input vector, in vocabulary
    order.  Mean pair loss is logged per epoch (and passed to
    ``on_epoch`` when given).  Deterministic for a fixed corpus, config
    and seed.
    """
    counts: Counter = Counter()
    for sentence in corpus:
        counts.update(sentence)
    vocab = _Vocab(counts, cfg.min_count)
    if len(vocab) < 2:
        raise DataError("vocabulary has fewer than 2 tokens; "
                        "negative sampling needs alternatives")
    _warn_if_racy(cfg.workers)
    encoded = [[vocab.index[t] for t in sentence if t in vocab.index]
               for sentence in corpus]
    encoded = [s for s in encoded if s]
    retained = sum(len(s) for s in encoded)
    total_steps = cfg.epochs * retained
    keep_prob = np.array([_keep_probability(c, vocab.total, cfg.subsample_t)
                          for c in vocab.counts])

    rng = np.random.default_rng(cfg.rng_seed)
    w_in = (rng.random((len(vocab), cfg.dim)) - 0.5) / cfg.dim
    w_out = np.zeros((len(vocab), cfg.dim))

    lr_span = cfg.initial_lr - cfg.min_lr
    step = 0
    for epoch in range(cfg.epochs):
        epoch_loss = 0.0
        epoch_pairs = 0
        for sentence in encoded:
            kept: list[int] = []
            steps_at: list[int] = []
            for idx in sentence:
                step += 1
                if keep_prob[idx] >= 1.0 or rng.random() < keep_prob[idx]:
                    kept.append(idx)
                    steps_at.append(step)
            for i, center in enumerate(kept):
                alpha = cfg.min_lr + lr_span * max(
                    0.0, 1.0 - steps_at[i] / total_steps)
                radius = int(rng.integers(1, cfg.window + 1))
                lo = max(0, i - radius)
                for j in range(lo, min(len(kept), i + radius + 1)):
                    if j == i:
                        continue
                    context = kept[j]
                    negs = vocab.draw_negatives(rng, cfg.negatives, context)
                    rows = np.concatenate(([context], negs))
                    labels = np.zeros(len(rows))
                    labels[0] = 1.0
                    epoch_loss += pair_loss(w_in[center], w_out[rows], labels)
                    epoch_pairs += 1
                    grad_v, grad_u = pair_gradients(w_in[center], w_out[rows],
                                                    labels)
                    np.add.at(w_out, rows, -alpha * grad_u)
                    w_in[center] -= alpha * grad_v
        mean_loss = epoch_loss / epoch_pairs if epoch_pairs else 0.0
        logger.info("epoch %d/%d: mean pair loss %.6f",
                    epoch + 1, cfg.epochs, mean_loss)
        if on_epoch is not None:
            on_epoch(epoch, mean_loss)
    logger.info("trained %d vectors of dim %d over %d retained tokens "
                "(%d epochs)", len(vocab), cfg.dim, retained, cfg.epochs)
    return VectorTable({w: w_in[i] for i, w in enumerate(vocab.words)},
                       meta=TableMeta(kind=kind, source=VectorSource.TRAINED))
