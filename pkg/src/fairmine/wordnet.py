"""WordNet database access and taxonomy-based similarity.

The parser reads the standard WNDB layout (``data.noun`` / ``index.noun``
and siblings for the other three parts of speech) directly, so any
correctly formatted database directory works: the full Princeton release
or the small bundled lexicon used by the tests and demos.  Only the
fields the scoring rules need are kept per synset: member lemmas,
hypernym links and the gloss.

Similarity follows the classic taxonomy measures.  Depth counts nodes,
not edges: a synset with no hypernyms has depth 1, and a virtual root of
depth 0 joins the top-level synsets of each part of speech so that every
same-POS pair has at least that common ancestor.  With ``depth(lcs)``
the depth of the deepest common ancestor and ``depth_a``/``depth_b`` the
depths of the two synsets measured through it:

* ``wup(a, b) = 2 * depth(lcs) / (depth_a + depth_b)``
* ``lch(a, b) = -log(len(a, b) / (2 * D))`` where ``len`` is the node
  count of the shortest connecting path (``len(x, x) = 1``) and ``D`` is
  the maximum depth of the taxonomy for that part of speech; it is
  reported normalized by its maximum ``log(2 * D)`` so both measures
  live on [0, 1].

A small writer for the same file format is included so tools and tests
can build self-contained databases; records round-trip through the
parser exactly.
"""

from __future__ import annotations

import enum
import json
import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .corpus import POS, WORDNET_POS, Token
from .errors import ConfigError, DataError, ResourceError

logger = logging.getLogger(__name__)

#: WNDB file suffix for each part of speech.
_POS_FILE = {POS.NOUN: "noun", POS.VERB: "verb", POS.ADJ: "adj", POS.ADV: "adv"}
_POS_BY_CHAR = {"n": POS.NOUN, "v": POS.VERB, "a": POS.ADJ, "r": POS.ADV,
                "s": POS.ADJ}
_HYPERNYM_SYMBOLS = frozenset(("@", "@i"))

_SENSE_STR_RE = re.compile(r"^(\d{8})-([nvar])$")


@dataclass(frozen=True)
class SynsetId:
    """Identity of a synset: byte offset in its data file plus POS.

    Offsets are only unique within one data file, so the part of speech
    takes part in equality and hashing; cross-POS collisions on offset
    are routine (every data file starts at the same header length).
    """

    offset: int
    pos: POS

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.offset, self.pos.order)

    def __str__(self) -> str:
        return f"{self.offset:08d}-{self.pos.value}"

    @classmethod
    def parse(cls, text: str) -> "SynsetId":
        m = _SENSE_STR_RE.match(text)
        if not m:
            raise DataError(f"invalid synset id {text!r} (want 'NNNNNNNN-p')")
        return cls(offset=int(m.group(1)), pos=_POS_BY_CHAR[m.group(2)])


@dataclass(frozen=True)
class Synset:
    id: SynsetId
    lemmas: tuple[str, ...]
    hypernyms: tuple[SynsetId, ...]
    gloss: str


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        return raw.decode("latin-1")


# Trailing adjective syntax markers: fair(a), alone(p), ...
_LEMMA_MARKER_RE = re.compile(r"\(\w+\)$")


def _parse_data_line(line: str, pos: POS, path: Path, byte_pos: int) -> Synset:
    head, _, gloss = line.partition("|")
    fields = head.split()
    try:
        offset = int(fields[0])
        ss_type = fields[2]
        w_cnt = int(fields[3], 16)
        cursor = 4
        lemmas = []
        for _ in range(w_cnt):
            lemmas.append(_LEMMA_MARKER_RE.sub("", fields[cursor]))
            cursor += 2  # word, lex_id
        p_cnt = int(fields[cursor])
        cursor += 1
        hypernyms = []
        for _ in range(p_cnt):
            symbol, tgt_offset, tgt_pos = fields[cursor:cursor + 3]
            cursor += 4  # symbol, offset, pos, source/target
            if symbol in _HYPERNYM_SYMBOLS:
                hypernyms.append(SynsetId(int(tgt_offset), _POS_BY_CHAR[tgt_pos]))
    except (IndexError, ValueError, KeyError) as exc:
        raise ResourceError(
            f"{path.name}: corrupt record at byte {byte_pos}: {exc}") from exc
    if offset != byte_pos:
        raise ResourceError(
            f"{path.name}: record claims offset {offset} but starts at byte "
            f"{byte_pos}")
    if _POS_BY_CHAR.get(ss_type) is not pos:
        raise ResourceError(
            f"{path.name}: record at byte {byte_pos} has synset type "
            f"{ss_type!r}, expected a {pos.name} type")
    return Synset(id=SynsetId(offset, pos), lemmas=tuple(lemmas),
                  hypernyms=tuple(hypernyms), gloss=gloss.strip())


def _parse_index_line(line: str, pos: POS, path: Path,
                      lineno: int) -> tuple[str, list[SynsetId]]:
    fields = line.split()
    try:
        lemma = fields[0]
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        offsets = fields[4 + p_cnt + 2:4 + p_cnt + 2 + synset_cnt]
        if len(offsets) != synset_cnt:
            raise ValueError(f"expected {synset_cnt} offsets")
        ids = [SynsetId(int(off), pos) for off in offsets]
    except (IndexError, ValueError) as exc:
        raise ResourceError(f"{path.name}:{lineno}: corrupt index line: {exc}") from exc
    return lemma, ids


class WordnetGraph:
    """An in-memory WordNet database with precomputed depths.

    Instances are immutable once built; similarity lookups cache ancestor
    sets internally, so sharing one graph between scorers is cheap.
    """

    def __init__(self, synsets: Mapping[SynsetId, Synset],
                 index: Mapping[str, Mapping[POS, tuple[SynsetId, ...]]]):
        self._synsets = dict(synsets)
        self._index = {lemma: dict(by_pos) for lemma, by_pos in index.items()}
        self._check_links()
        self._depth = self._compute_depths()
        self._max_depth = {}
        for sid, depth in self._depth.items():
            pos = sid.pos
            if depth > self._max_depth.get(pos, 0):
                self._max_depth[pos] = depth
        self._ancestor_cache: dict[SynsetId, dict[SynsetId, int]] = {}

    def _check_links(self) -> None:
        for synset in self._synsets.values():
            for hyp in synset.hypernyms:
                if hyp not in self._synsets:
                    raise ResourceError(
                        f"synset {synset.id} points to missing hypernym {hyp}")
        for lemma, by_pos in self._index.items():
            for ids in by_pos.values():
                for sid in ids:
                    if sid not in self._synsets:
                        raise ResourceError(
                            f"index entry {lemma!r} points to missing synset {sid}")

    def _compute_depths(self) -> dict[SynsetId, int]:
        depth: dict[SynsetId, int] = {}
        IN_PROGRESS = -1
        for start in self._synsets:
            stack = [start]
            while stack:
                sid = stack[-1]
                if sid in depth and depth[sid] != IN_PROGRESS:
                    stack.pop()
                    continue
                hyps = self._synsets[sid].hypernyms
                pending = [h for h in hyps if depth.get(h, IN_PROGRESS) == IN_PROGRESS]
                unvisited = [h for h in pending if h not in depth]
                if not pending:
                    depth[sid] = 1 if not hyps else 1 + min(depth[h] for h in hyps)
                    stack.pop()
                elif unvisited:
                    depth[sid] = IN_PROGRESS
                    stack.extend(unvisited)
                else:
                    raise ResourceError(f"hypernym cycle involving {sid}")
        return depth

    # -- lookups ---------------------------------------------------------

    def __contains__(self, sid: SynsetId) -> bool:
        return sid in self._synsets

    def __len__(self) -> int:
        return len(self._synsets)

    def synset(self, sid: SynsetId) -> Synset:
        try:
            return self._synsets[sid]
        except KeyError:
            raise DataError(f"unknown synset {sid}") from None

    def all_synsets(self, pos: Optional[POS] = None) -> Iterator[Synset]:
        """Synsets in (offset, POS) order, optionally restricted to one POS."""
        for sid in sorted(self._synsets, key=lambda s: s.sort_key):
            if pos is None or sid.pos is pos:
                yield self._synsets[sid]

    def synsets_for(self, lemma: str, pos: Optional[POS] = None) -> list[SynsetId]:
        """Synsets listing ``lemma``, in index (sense priority) order."""
        by_pos = self._index.get(lemma.lower().replace(" ", "_"))
        if not by_pos:
            return []
        if pos is not None:
            return list(by_pos.get(pos, ()))
        out: list[SynsetId] = []
        for p in WORDNET_POS:
            out.extend(by_pos.get(p, ()))
        return out

    def pos_of_lemma(self, lemma: str) -> set[POS]:
        by_pos = self._index.get(lemma.lower().replace(" ", "_"))
        return set(by_pos) if by_pos else set()

    def depth(self, sid: SynsetId) -> int:
        try:
            return self._depth[sid]
        except KeyError:
            raise DataError(f"unknown synset {sid}") from None

    def max_depth(self, pos: POS) -> int:
        return self._max_depth.get(pos, 0)

    def hypernyms(self, sid: SynsetId) -> tuple[SynsetId, ...]:
        return self.synset(sid).hypernyms

    def ancestors(self, sid: SynsetId) -> dict[SynsetId, int]:
        """Minimum hypernym-edge distance to every ancestor (self at 0)."""
        cached = self._ancestor_cache.get(sid)
        if cached is not None:
            return cached
        if sid not in self._synsets:
            raise DataError(f"unknown synset {sid}")
        dist = {sid: 0}
        frontier = [sid]
        while frontier:
            nxt = []
            for node in frontier:
                d = dist[node] + 1
                for hyp in self._synsets[node].hypernyms:
                    if hyp not in dist or d < dist[hyp]:
                        dist[hyp] = d
                        nxt.append(hyp)
            frontier = nxt
        self._ancestor_cache[sid] = dist
        return dist


def load_wordnet(directory) -> WordnetGraph:
    """Load a WNDB-format database directory into memory.

    Expects ``data.{noun,verb,adj,adv}`` and ``index.{noun,verb,adj,adv}``,
    the layout of a standard ``dict`` directory.  Raises
    :class:`ResourceError` when a file is missing or malformed.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ResourceError(f"not a database directory: {directory}")
    synsets: dict[SynsetId, Synset] = {}
    index: dict[str, dict[POS, tuple[SynsetId, ...]]] = {}
    for pos in WORDNET_POS:
        data_path = directory / f"data.{_POS_FILE[pos]}"
        index_path = directory / f"index.{_POS_FILE[pos]}"
        for path in (data_path, index_path):
            if not path.is_file():
                raise ResourceError(f"missing database file: {path}")
        byte_pos = 0
        for raw_line in data_path.read_bytes().split(b"\n"):
            line_start = byte_pos
            byte_pos += len(raw_line) + 1
            if not raw_line or raw_line.startswith(b" "):
                continue
            synset = _parse_data_line(_decode(raw_line), pos, data_path, line_start)
            synsets[synset.id] = synset
        for lineno, raw_line in enumerate(index_path.read_bytes().split(b"\n"), 1):
            if not raw_line or raw_line.startswith(b" "):
                continue
            lemma, ids = _parse_index_line(_decode(raw_line), pos, index_path, lineno)
            index.setdefault(lemma.lower(), {})[pos] = tuple(ids)
    graph = WordnetGraph(synsets, index)
    logger.info("loaded %d synsets, %d lemmas from %s",
                len(graph), len(index), directory)
    return graph


# -- writer ----------------------------------------------------------------


@dataclass(frozen=True)
class WndbEntry:
    """One synset to be written: symbolic key plus content.

    ``hypernyms`` name other entries by key.  Lemma strings use
    underscores for spaces and must not contain whitespace; the gloss
    must not contain ``|`` or newlines.
    """

    key: str
    pos: POS
    lemmas: tuple[str, ...]
    hypernyms: tuple[str, ...] = ()
    gloss: str = ""


_HEADER = "  1 This database was generated programmatically.\n"


def write_wndb(entries: Sequence[WndbEntry], directory) -> dict[str, SynsetId]:
    """Write entries as a WNDB database directory; return key -> id map.

    Every offset field is rendered at the standard fixed width of eight
    digits, so record byte positions can be computed with placeholder
    offsets first and filled in on a second pass.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    all_keys = {entry.key for entry in entries}
    if len(all_keys) != len(entries):
        raise ConfigError("duplicate entry keys")
    for entry in entries:
        if not entry.lemmas:
            raise ConfigError(f"entry {entry.key!r} has no lemmas")
        if any(ch in entry.gloss for ch in "|\n"):
            raise ConfigError(f"entry {entry.key!r}: gloss may not contain '|'")
        for lemma in entry.lemmas:
            if not lemma or any(c.isspace() for c in lemma):
                raise ConfigError(f"entry {entry.key!r}: bad lemma {lemma!r}")
        for hyp in entry.hypernyms:
            if hyp not in all_keys:
                raise ConfigError(f"entry {entry.key!r}: unknown hypernym {hyp!r}")

    by_pos: dict[POS, list[WndbEntry]] = {pos: [] for pos in WORDNET_POS}
    pos_of_key = {}
    for entry in entries:
        by_pos[entry.pos].append(entry)
        pos_of_key[entry.key] = entry.pos

    def render(entry: WndbEntry, offset: int, offsets: Mapping[str, int]) -> str:
        ss_type = entry.pos.value
        parts = [f"{offset:08d}", "00", ss_type, f"{len(entry.lemmas):02x}"]
        for lemma in entry.lemmas:
            parts += [lemma, "0"]
        parts.append(f"{len(entry.hypernyms):03d}")
        for hyp in entry.hypernyms:
            parts += ["@", f"{offsets[hyp]:08d}", pos_of_key[hyp].value, "0000"]
        if entry.pos is POS.VERB:
            parts.append("00")
        return " ".join(parts) + f" | {entry.gloss}"

    # First pass with zero offsets fixes every record's byte length; the
    # second pass substitutes the real positions without changing them.
    offsets = {entry.key: 0 for entry in entries}
    for pos in WORDNET_POS:
        byte_pos = len(_HEADER.encode("utf-8"))
        for entry in by_pos[pos]:
            offsets[entry.key] = byte_pos
            byte_pos += len(render(entry, 0, offsets).encode("utf-8")) + 1

    result = {}
    for pos in WORDNET_POS:
        data_lines = [render(e, offsets[e.key], offsets) for e in by_pos[pos]]
        data_path = directory / f"data.{_POS_FILE[pos]}"
        data_path.write_text(_HEADER + "".join(line + "\n" for line in data_lines),
                             encoding="utf-8")
        lemma_map: dict[str, list[str]] = {}
        for entry in by_pos[pos]:
            for lemma in entry.lemmas:
                lemma_map.setdefault(lemma.lower(), []).append(
                    f"{offsets[entry.key]:08d}")
        index_lines = []
        for lemma in sorted(lemma_map):
            offs = lemma_map[lemma]
            index_lines.append(
                f"{lemma} {pos.value} {len(offs)} 1 @ {len(offs)} 0 "
                + " ".join(offs))
        index_path = directory / f"index.{_POS_FILE[pos]}"
        index_path.write_text(_HEADER + "".join(line + "\n" for line in index_lines),
                              encoding="utf-8")
    for entry in entries:
        result[entry.key] = SynsetId(offsets[entry.key], entry.pos)
    return result


# -- similarity --------------------------------------------------------------


class SimilarityMeasure(enum.Enum):
    WUP = "wup"
    LCH = "lch"


def _require_same_pos(a: SynsetId, b: SynsetId) -> None:
    if a.pos is not b.pos:
        raise ConfigError(
            f"taxonomy similarity needs matching parts of speech, got "
            f"{a} and {b}")


def senses(lemma: str, pos_set: Iterable[POS], wn: WordnetGraph
           ) -> list[SynsetId]:
    """All synsets of ``lemma`` under the requested parts of speech.

    Non-taxonomy members of ``pos_set`` (OTHER) contribute nothing;
    within each POS the index (sense priority) order is kept.
    """
    out: list[SynsetId] = []
    for pos in sorted(set(pos_set) & set(WORDNET_POS), key=lambda p: p.order):
        out.extend(wn.synsets_for(lemma, pos))
    return out


def lcs_depth(wn: WordnetGraph, a: SynsetId, b: SynsetId
              ) -> Optional[tuple[SynsetId, int, int, int]]:
    """Deepest common ancestor with the depths measured through it.

    Returns ``(lcs, depth_lcs, depth_a, depth_b)`` where the two synset
    depths follow shortest paths via the chosen ancestor.  Ties on
    ancestor depth prefer the smaller combined distance (which maximizes
    the similarity built on it), then the smaller id.  Returns None when
    only the virtual root joins the pair (no shared real ancestor).
    """
    _require_same_pos(a, b)
    dist_a = wn.ancestors(a)
    dist_b = wn.ancestors(b)
    common = dist_a.keys() & dist_b.keys()
    if not common:
        return None
    best = min(common, key=lambda c: (-wn.depth(c), dist_a[c] + dist_b[c],
                                      c.sort_key))
    depth_lcs = wn.depth(best)
    return best, depth_lcs, depth_lcs + dist_a[best], depth_lcs + dist_b[best]


def wup(wn: WordnetGraph, a: SynsetId, b: SynsetId) -> float:
    """Depth-scaled similarity in [0, 1]; exactly 1.0 only for a == b."""
    info = lcs_depth(wn, a, b)
    if info is None:
        return 0.0  # only the virtual root (depth 0) is shared
    _, depth_lcs, depth_a, depth_b = info
    return (2.0 * depth_lcs) / (depth_a + depth_b)


def path_len(wn: WordnetGraph, a: SynsetId, b: SynsetId) -> int:
    """Node count of the shortest connecting path; ``path_len(x, x) == 1``.

    Paths may route through the virtual root, which contributes no node,
    so two synsets with no shared real ancestor are ``depth(a) + depth(b)``
    apart.
    """
    _require_same_pos(a, b)
    if a == b:
        return 1
    dist_a = wn.ancestors(a)
    dist_b = wn.ancestors(b)
    best = wn.depth(a) + wn.depth(b)
    for c in dist_a.keys() & dist_b.keys():
        best = min(best, dist_a[c] + dist_b[c] + 1)
    return best


def lch(wn: WordnetGraph, a: SynsetId, b: SynsetId) -> float:
    """Path-length similarity ``-log(len / 2D)``, unnormalized.

    ``D`` is the deepest node depth of the pair's part of speech, so the
    maximum value ``log(2D)`` is attained exactly at ``a == b``.
    """
    _require_same_pos(a, b)
    two_d = 2 * wn.max_depth(a.pos)
    return math.log(two_d) - math.log(path_len(wn, a, b))


def lch_norm(wn: WordnetGraph, a: SynsetId, b: SynsetId) -> float:
    """:func:`lch` rescaled to [0, 1] by its maximum ``log(2D)``.

    This is the form used for scoring, so one threshold grid serves both
    measures; the most distant pairs (path length ``2D``) map to 0.
    """
    _require_same_pos(a, b)
    two_d = 2 * wn.max_depth(a.pos)
    return (math.log(two_d) - math.log(path_len(wn, a, b))) / math.log(two_d)


def similarity(wn: WordnetGraph, a: SynsetId, b: SynsetId,
               measure: SimilarityMeasure) -> float:
    if measure is SimilarityMeasure.WUP:
        return wup(wn, a, b)
    if measure is SimilarityMeasure.LCH:
        return lch_norm(wn, a, b)
    raise ConfigError(f"unknown similarity measure {measure!r}")


# -- seed sense sets ---------------------------------------------------------


DEFAULT_EXPAND_THRESHOLD = 0.9
DEFAULT_CAP = 30


class SeedOrigin(enum.Enum):
    MANUAL = "manual"
    EXPANDED = "expanded"


@dataclass(frozen=True)
class SeedSenseSet:
    """An ordered set of seed senses plus the measure used to grow it.

    ``origin`` records which senses were given by hand and which were
    admitted by expansion; senses with no recorded origin count as
    manual (the seed file format does not persist origins).
    """

    senses: tuple[SynsetId, ...]
    measure: SimilarityMeasure = SimilarityMeasure.WUP
    expand_threshold: float = DEFAULT_EXPAND_THRESHOLD
    cap: int = DEFAULT_CAP
    origin: Mapping[SynsetId, SeedOrigin] = field(default_factory=dict)

    def __post_init__(self):
        if not self.senses:
            raise ConfigError("seed sense set is empty")
        if len(set(self.senses)) != len(self.senses):
            raise ConfigError("seed sense set has duplicates")
        if not 0.0 < self.expand_threshold <= 1.0:
            raise ConfigError(
                f"expand_threshold must be in (0, 1], got {self.expand_threshold}")
        if self.cap < 1:
            raise ConfigError(f"cap must be positive, got {self.cap}")
        if len(self.senses) > self.cap:
            raise ConfigError(
                f"{len(self.senses)} seed senses exceed the cap of {self.cap}")
        sense_set = set(self.senses)
        if any(sid not in sense_set for sid in self.origin):
            raise ConfigError("origin mentions a sense not in the set")
        full = {sid: self.origin.get(sid, SeedOrigin.MANUAL)
                for sid in self.senses}
        object.__setattr__(self, "origin", full)

    @property
    def origin_counts(self) -> tuple[int, int]:
        """(n_manual, n_expanded)."""
        n_exp = sum(1 for o in self.origin.values() if o is SeedOrigin.EXPANDED)
        return len(self.senses) - n_exp, n_exp


def expand_seeds(initial: Sequence[SynsetId], wn: WordnetGraph,
                 measure: SimilarityMeasure = SimilarityMeasure.WUP,
                 threshold: float = DEFAULT_EXPAND_THRESHOLD,
                 cap: int = DEFAULT_CAP) -> SeedSenseSet:
    """Grow a seed sense set by taxonomy similarity.

    Every synset sharing a part of speech with some initial sense is a
    candidate; those whose best similarity to the initial senses reaches
    ``threshold`` are admitted in order of decreasing similarity (ties by
    id) until the set would exceed ``cap``.  The initial senses always
    stay, in their given order, ahead of the admitted ones.
    """
    if not initial:
        raise ConfigError("need at least one initial seed sense")
    initial = tuple(initial)
    if len(set(initial)) != len(initial):
        raise ConfigError("initial seed senses contain duplicates")
    if len(initial) > cap:
        raise ConfigError(f"{len(initial)} initial senses exceed the cap of {cap}")
    for sid in initial:
        if sid not in wn:
            raise DataError(f"seed sense {sid} is not in the database")
    by_pos: dict[POS, list[SynsetId]] = {}
    for sid in initial:
        by_pos.setdefault(sid.pos, []).append(sid)
    scored = []
    initial_set = set(initial)
    for pos, seeds_here in by_pos.items():
        for synset in wn.all_synsets(pos):
            if synset.id in initial_set:
                continue
            sim = max(similarity(wn, synset.id, seed, measure)
                      for seed in seeds_here)
            if sim >= threshold:
                scored.append((-sim, synset.id.sort_key, synset.id))
    scored.sort()
    room = cap - len(initial)
    admitted = tuple(sid for _, _, sid in scored[:room])
    if len(scored) > room:
        logger.info("seed expansion found %d candidates at threshold %g; "
                    "kept %d to stay under the cap of %d",
                    len(scored), threshold, room, cap)
    origin = {sid: SeedOrigin.MANUAL for sid in initial}
    origin.update({sid: SeedOrigin.EXPANDED for sid in admitted})
    return SeedSenseSet(senses=initial + admitted, measure=measure,
                        expand_threshold=threshold, cap=cap, origin=origin)


def load_seeds(path, wn: Optional[WordnetGraph] = None) -> SeedSenseSet:
    """Read a seed sense set from its JSON file.

    The file holds exactly ``measure``, ``expand_threshold``, ``cap`` and
    ``senses`` (a list of ``"NNNNNNNN-p"`` strings).  When a graph is
    supplied, senses must exist in it.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ResourceError(f"cannot read seed file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: malformed JSON ({exc.msg})") from exc
    if not isinstance(raw, dict):
        raise DataError(f"{path}: expected a JSON object")
    expected = {"measure", "expand_threshold", "cap", "senses"}
    if set(raw) != expected:
        missing = expected - set(raw)
        extra = set(raw) - expected
        problem = []
        if missing:
            problem.append(f"missing keys {sorted(missing)}")
        if extra:
            problem.append(f"unknown keys {sorted(extra)}")
        raise DataError(f"{path}: {', '.join(problem)}")
    try:
        measure = SimilarityMeasure(raw["measure"])
    except ValueError:
        raise DataError(f"{path}: unknown measure {raw['measure']!r}") from None
    if not isinstance(raw["senses"], list) or not all(
            isinstance(s, str) for s in raw["senses"]):
        raise DataError(f"{path}: 'senses' must be a list of strings")
    senses = tuple(SynsetId.parse(s) for s in raw["senses"])
    try:
        seeds = SeedSenseSet(senses=senses, measure=measure,
                             expand_threshold=float(raw["expand_threshold"]),
                             cap=int(raw["cap"]))
    except (TypeError, ValueError) as exc:
        raise DataError(f"{path}: {exc}") from exc
    except ConfigError as exc:
        raise DataError(f"{path}: {exc}") from exc
    if wn is not None:
        for sid in seeds.senses:
            if sid not in wn:
                raise DataError(f"{path}: seed sense {sid} is not in the database")
    return seeds


def save_seeds(seeds: SeedSenseSet, path) -> None:
    """Write a seed sense set as JSON (stable key order, 2-space indent)."""
    record = {
        "measure": seeds.measure.value,
        "expand_threshold": seeds.expand_threshold,
        "cap": seeds.cap,
        "senses": [str(s) for s in seeds.senses],
    }
    Path(path).write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")


def word_seed_similarity(word: Token, seeds: SeedSenseSet, wn: WordnetGraph,
                         measure: Optional[SimilarityMeasure] = None,
                         ) -> tuple[float, Optional[SynsetId]]:
    """Best taxonomy similarity between any sense of ``word`` and any seed.

    The word's candidate senses are those of its lemma under the parts of
    speech in its ``pos_set``; only same-POS (sense, seed) pairs are
    compared.  Returns the score and the seed sense that achieved it
    (the earliest listed seed on ties); a word with no usable senses or
    no positive pairing scores 0.0 with no seed.
    """
    if measure is None:
        measure = seeds.measure
    if not word.is_content:
        return 0.0, None
    candidates = senses(word.lemma, word.pos_set, wn)
    if not candidates:
        return 0.0, None
    best = 0.0
    best_seed: Optional[SynsetId] = None
    for seed in seeds.senses:
        for sense in candidates:
            if sense.pos is not seed.pos:
                continue
            score = similarity(wn, sense, seed, measure)
            if score > best:
                best = score
                best_seed = seed
    return best, best_seed
