"""Sentence corpora: tokenization, coarse POS assignment, dataset I/O.

Sentences arrive pre-segmented (one per line / one per record).  Tokenization
is deliberately minimal: split on whitespace and punctuation boundaries,
lowercase, strip a trailing possessive ``'s``.  There is no stemmer and no
contextual tagger; a token's part-of-speech is the *set* of categories under
which its lemma is listed in the WordNet index (with a small suffix fallback
for words the lexicon does not know).  That is all the downstream scoring
rules need: the POS set only restricts which senses of a word are candidates.

All structures are immutable after construction, so loaded corpora can be
shared freely between concurrent scorers.
"""

from __future__ import annotations

import enum
import json
import logging
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from .errors import DataError, ResourceError

if TYPE_CHECKING:  # pragma: no cover - import only for type checkers
    from .wordnet import WordnetGraph

logger = logging.getLogger(__name__)


class POS(enum.Enum):
    """Coarse part-of-speech categories (the four WordNet ones plus OTHER)."""

    NOUN = "n"
    VERB = "v"
    ADJ = "a"
    ADV = "r"
    OTHER = "x"

    @property
    def order(self) -> int:
        return _POS_ORDER[self]


_POS_ORDER = {POS.NOUN: 0, POS.VERB: 1, POS.ADJ: 2, POS.ADV: 3, POS.OTHER: 4}

#: WordNet categories only, in priority order.
WORDNET_POS = (POS.NOUN, POS.VERB, POS.ADJ, POS.ADV)


class Label(enum.Enum):
    FAIR = "fair"
    NON_FAIR = "non_fair"


@dataclass(frozen=True)
class Token:
    """One token of a sentence.

    ``lemma`` is the lowercased surface form with a trailing possessive
    ``'s`` removed; ``pos_set`` is never empty (``{OTHER}`` when nothing is
    known); punctuation-only tokens and stopwords are not content tokens.
    """

    surface: str
    lemma: str
    pos_set: frozenset[POS]
    is_content: bool


@dataclass(frozen=True)
class LabeledSentence:
    id: str
    text: str
    label: Optional[Label] = None
    tokens: tuple[Token, ...] = ()


@dataclass(frozen=True)
class Dataset:
    sentences: tuple[LabeledSentence, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        """(n_fair, n_non_fair, n_unlabeled)."""
        n_fair = sum(1 for s in self.sentences if s.label is Label.FAIR)
        n_non = sum(1 for s in self.sentences if s.label is Label.NON_FAIR)
        return n_fair, n_non, len(self.sentences) - n_fair - n_non

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


# Words are runs of alphanumerics, optionally joined by internal apostrophes
# or hyphens ("individual's", "on-the-job"); everything else that is not
# whitespace becomes a single-character punctuation token.
_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*")
_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*|\S")

# A compact English stopword list (function words only; scoring is max-based,
# so spurious matches on function words would be pure noise).
STOPWORDS = frozenset("""
a about above after again against all am an and any are aren't as at be
because been before being below between both but by can cannot could
couldn't did didn't do does doesn't doing don't down during each few for
from further had hadn't has hasn't have haven't having he he'd he'll he's
her here here's hers herself him himself his how how's i i'd i'll i'm i've
if in into is isn't it it's its itself let's me more most mustn't my myself
no nor not of off on once only or other ought our ours ourselves out over
own same shall shan't she she'd she'll she's should shouldn't so some such
than that that's the their theirs them themselves then there there's these
they they'd they'll they're they've this those through to too under until
up very was wasn't we we'd we'll we're we've were weren't what what's when
when's where where's which while who who's whom why why's with won't would
wouldn't you you'd you'll you're you've your yours yourself yourselves
""".split())

_OTHER_ONLY = frozenset((POS.OTHER,))


def _lemma_of(surface: str) -> str:
    lemma = surface.lower().replace("’", "'")
    if lemma.endswith("'s") and len(lemma) > 2:
        lemma = lemma[:-2]
    return lemma


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; deterministic, never fails.

    Punctuation characters are kept as their own non-content tokens so that
    token offsets remain meaningful; POS sets start as ``{OTHER}`` and are
    refined by :func:`pos_lookup` once a lexicon is available.
    """
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        surface = match.group()
        is_word = bool(_WORD_RE.fullmatch(surface)) and any(c.isalnum() for c in surface)
        lemma = _lemma_of(surface) if is_word else surface
        is_content = is_word and lemma not in STOPWORDS
        tokens.append(Token(surface=surface, lemma=lemma, pos_set=_OTHER_ONLY,
                            is_content=is_content))
    return tokens


_SUFFIX_RULES = (
    (("ly",), POS.ADV),
    (("ous", "ful", "ive"), POS.ADJ),
    (("tion", "ness", "ment"), POS.NOUN),
)


def pos_lookup(token: Token, wn: "WordnetGraph") -> frozenset[POS]:
    """POS categories under which the token's lemma has at least one synset.

    Falls back to suffix heuristics for out-of-lexicon words, and to
    ``{OTHER}`` when those do not apply either.  Non-word tokens are always
    ``{OTHER}``.
    """
    if not any(c.isalnum() for c in token.lemma):
        return _OTHER_ONLY
    found = wn.pos_of_lemma(token.lemma)
    if found:
        return frozenset(found)
    for suffixes, pos in _SUFFIX_RULES:
        if token.lemma.endswith(suffixes):
            return frozenset((pos,))
    return _OTHER_ONLY


def annotate(tokens: Iterable[Token], wn: "WordnetGraph") -> list[Token]:
    """Return copies of ``tokens`` with ``pos_set`` filled in from ``wn``."""
    return [replace(t, pos_set=pos_lookup(t, wn)) for t in tokens]


def tokenize_dataset(ds: Dataset, wn: Optional["WordnetGraph"] = None) -> Dataset:
    """Tokenize every sentence (and POS-annotate when a lexicon is given)."""
    out = []
    for s in ds.sentences:
        tokens = tokenize(s.text)
        if wn is not None:
            tokens = annotate(tokens, wn)
        out.append(replace(s, tokens=tuple(tokens)))
    return Dataset(sentences=tuple(out))


def word_lemmas(text: str) -> list[str]:
    """Lemmas of the word tokens of ``text`` (punctuation dropped).

    This is the token stream the vector trainers consume; stopwords stay
    in, since frequency-based downweighting happens inside the trainer.
    """
    return [t.lemma for t in tokenize(text)
            if any(c.isalnum() for c in t.surface)]


def _parse_label(raw, lineno: int) -> Optional[Label]:
    if raw is None:
        return None
    try:
        return Label(raw)
    except ValueError:
        raise DataError(f"line {lineno}: unknown label {raw!r}") from None


def load_labeled(path) -> Dataset:
    """Read a labeled dataset from a JSON-lines file.

    One object per line: ``{"id": str, "text": str, "label":
    "fair" | "non_fair" | null}``.  Blank lines are ignored.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot read dataset {path}: {exc}") from exc
    sentences: list[LabeledSentence] = []
    seen: set[str] = set()
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"line {lineno}: malformed JSON ({exc.msg})") from exc
        if not isinstance(record, dict) or "id" not in record or "text" not in record:
            raise DataError(f"line {lineno}: record must have 'id' and 'text'")
        sid = record["id"]
        if not isinstance(sid, str) or not sid:
            raise DataError(f"line {lineno}: invalid id {sid!r}")
        if sid in seen:
            raise DataError(f"duplicate sentence id {sid!r} (line {lineno})")
        seen.add(sid)
        text = record["text"]
        if not isinstance(text, str) or not text.strip():
            raise DataError(f"line {lineno}: empty text for id {sid!r}")
        label = _parse_label(record.get("label"), lineno)
        sentences.append(LabeledSentence(id=sid, text=text, label=label))
    return Dataset(sentences=tuple(sentences))


def save_labeled(ds: Dataset, path) -> None:
    """Write a dataset back out in the JSON-lines format (fixed key order)."""
    lines = []
    for s in ds.sentences:
        record = {"id": s.id, "text": s.text,
                  "label": s.label.value if s.label else None}
        lines.append(json.dumps(record, ensure_ascii=False))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_plain_corpus(path) -> list[str]:
    """Read a plain one-sentence-per-line corpus; blank lines are dropped."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot read corpus {path}: {exc}") from exc
    return [line for line in raw.splitlines() if line.strip()]
