"""Command-line entry point: reproducible scoring and training runs.

One invocation resolves a run configuration (built-in defaults, then an
optional JSON config file, then flags, flags winning), executes a single
subcommand, and writes its artifacts plus a ``manifest.json`` into the
output directory.  The manifest echoes the resolved configuration and
the SHA-256 checksum of every input file, and contains nothing volatile,
so rerunning the same configuration rewrites every artifact byte for
byte.

Exit codes are a stable contract: 0 success, 1 usage or configuration
error, 2 data error, 3 resource error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Optional, Sequence

from . import resources
from .classify import (Backend, DEFAULT_THRESHOLD, make_scorer, save_scores,
                       score_dataset, apply_threshold, validate_threshold)
from .corpus import (Dataset, annotate, load_labeled, load_plain_corpus,
                     tokenize, tokenize_dataset, word_lemmas)
from .docvec import DocvecConfig, train_pvdbow
from .embeddings import (SgnsConfig, VectorKind, load_vectors, save_vectors,
                         sense_key, train_sgns)
from .errors import ConfigError, DataError, FairmineError, ResourceError
from .evaluate import DEFAULT_GRID, save_roc_csv, save_roc_svg, save_sweep_report, sweep
from .wordnet import expand_seeds, load_seeds, load_wordnet, save_seeds

logger = logging.getLogger(__name__)

_EXIT_CODES = ((ConfigError, 1), (DataError, 2), (ResourceError, 3))

DEFAULT_GRID_SPEC = "0.1:0.9:0.1"
DEFAULT_OUT_DIR = "out"

#: Settings a JSON config file may provide (flags override them).
_CONFIG_KEYS = frozenset((
    "backend", "threshold", "grid", "wordnet", "vectors", "dataset", "seeds",
    "out", "seed", "workers", "corpus", "cap",
    "dim", "window", "negatives", "epochs", "initial_lr", "min_lr",
    "min_count", "subsample_t",
))


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code of this tool (1, not 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_grid(text: str) -> tuple[float, ...]:
    """Parse a ``start:stop:step`` threshold grid (inclusive endpoints).

    Decimal stepping keeps the values exact: ``0.1:0.9:0.1`` yields the
    standard nine thresholds with no accumulation error.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must look like 'start:stop:step', got {text!r}")
    try:
        start, stop, step = (Decimal(p) for p in parts)
    except InvalidOperation:
        raise ConfigError(f"grid has a non-numeric part: {text!r}") from None
    if step <= 0:
        raise ConfigError(f"grid step must be positive, got {parts[2]}")
    if stop < start:
        raise ConfigError(f"grid stop {parts[1]} is below its start {parts[0]}")
    if (stop - start) / step > 999:
        raise ConfigError(f"grid {text!r} has more than 1000 thresholds")
    values = []
    value = start
    while value <= stop:
        values.append(float(value))
        value += step
    return tuple(values)


class RunConfig:
    """The resolved settings of one run: defaults < config file < flags."""

    def __init__(self, command: str, args: argparse.Namespace):
        self.command = command
        file_settings = self._load_file(getattr(args, "config", None))
        self._args = args
        self._file = file_settings

    @staticmethod
    def _load_file(path: Optional[str]) -> dict:
        if path is None:
            return {}
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ResourceError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: malformed JSON ({exc.msg})") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"{path}: config must be a JSON object")
        unknown = sorted(set(raw) - _CONFIG_KEYS)
        if unknown:
            raise ConfigError(f"{path}: unknown config keys {unknown}")
        return raw

    def get(self, key: str, default=None):
        flag = getattr(self._args, key, None)
        if flag is not None and flag != []:
            return flag
        if key in self._file:
            return self._file[key]
        return default

    def path(self, key: str, bundled: Optional[Path] = None) -> Path:
        value = self.get(key)
        if value is not None:
            path = Path(value)
            if not path.exists():
                raise ResourceError(f"--{key}: no such path: {path}")
            return path
        if bundled is None:
            raise ConfigError(f"the {self.command} command needs --{key}")
        return bundled

    def corpus_paths(self) -> list[Path]:
        value = self.get("corpus")
        if value is None:
            raise ConfigError(f"the {self.command} command needs --corpus")
        if isinstance(value, str):
            value = [value]
        paths = [Path(v) for v in value]
        for path in paths:
            if not path.exists():
                raise ResourceError(f"--corpus: no such file: {path}")
        return paths

    def out_dir(self) -> Path:
        out = Path(self.get("out", DEFAULT_OUT_DIR))
        out.mkdir(parents=True, exist_ok=True)
        return out

    def backend(self) -> Backend:
        name = self.get("backend", Backend.CLASSICAL.value)
        try:
            return Backend(name)
        except ValueError:
            choices = ", ".join(b.value for b in Backend)
            raise ConfigError(f"unknown backend {name!r} (choose from {choices})") from None

    def int_of(self, key: str, default: int) -> int:
        value = self.get(key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None

    def float_of(self, key: str, default: float) -> float:
        value = self.get(key, default)
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be a number, got {value!r}") from None

    def sgns_config(self) -> SgnsConfig:
        return SgnsConfig(
            dim=self.int_of("dim", 100),
            window=self.int_of("window", 5),
            negatives=self.int_of("negatives", 10),
            epochs=self.int_of("epochs", 20),
            initial_lr=self.float_of("initial_lr", 0.025),
            min_lr=self.float_of("min_lr", 1e-4),
            min_count=self.int_of("min_count", 2),
            subsample_t=self.float_of("subsample_t", 1e-4),
            rng_seed=self.int_of("seed", 1),
            workers=self.int_of("workers", 1),
        )

    def docvec_config(self) -> DocvecConfig:
        return DocvecConfig(
            dim=self.int_of("dim", 100),
            negatives=self.int_of("negatives", 10),
            epochs=self.int_of("epochs", 20),
            initial_lr=self.float_of("initial_lr", 0.025),
            min_lr=self.float_of("min_lr", 1e-4),
            min_count=self.int_of("min_count", 2),
            rng_seed=self.int_of("seed", 1),
            workers=self.int_of("workers", 1),
        )


# -- manifests ---------------------------------------------------------------


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _input_checksums(inputs: dict[str, Path]) -> dict[str, dict[str, str]]:
    out: dict[str, dict[str, str]] = {}
    for role, path in inputs.items():
        if path.is_dir():
            for child in sorted(path.iterdir()):
                if child.is_file():
                    out[f"{role}/{child.name}"] = {
                        "path": str(child), "sha256": _sha256(child)}
        else:
            out[role] = {"path": str(path), "sha256": _sha256(path)}
    return out


def write_manifest(out_dir: Path, command: str, settings: dict,
                   inputs: dict[str, Path]) -> None:
    """Echo the run into ``manifest.json``: settings plus input checksums.

    Contains no timestamps or host details, so a rerun with the same
    configuration and inputs rewrites the same bytes.
    """
    from . import __version__
    manifest = {
        "tool": {"name": "fairmine", "version": __version__},
        "command": command,
        "settings": settings,
        "inputs": _input_checksums(inputs),
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=False) + "\n",
                    encoding="utf-8")


# -- subcommands ---------------------------------------------------------------


def cmd_seed_expand(cfg: RunConfig) -> int:
    wordnet_dir = cfg.path("wordnet", resources.miniwn_dir())
    seeds_path = cfg.path("seeds", resources.default_seeds_path())
    wn = load_wordnet(wordnet_dir)
    initial = load_seeds(seeds_path, wn)
    threshold = cfg.float_of("threshold", initial.expand_threshold)
    cap = cfg.int_of("cap", initial.cap)
    expanded = expand_seeds(initial.senses, wn, measure=initial.measure,
                            threshold=threshold, cap=cap)
    out_dir = cfg.out_dir()
    out_path = out_dir / "seeds.json"
    save_seeds(expanded, out_path)
    write_manifest(out_dir, "seed-expand",
                   {"wordnet": str(wordnet_dir), "seeds": str(seeds_path),
                    "measure": expanded.measure.value,
                    "expand_threshold": threshold, "cap": cap,
                    "out": str(out_dir)},
                   {"wordnet": wordnet_dir, "seeds": seeds_path})
    n_manual, n_expanded = expanded.origin_counts
    print(f"seed set: {len(expanded.senses)} senses "
          f"({n_manual} manual, {n_expanded} expanded by {expanded.measure.value} "
          f">= {threshold:g})")
    print(f"wrote {out_path}")
    return 0


def _prepared_dataset(cfg: RunConfig, backend: Backend
                      ) -> tuple[Dataset, dict[str, Path]]:
    """Load the dataset and tokenize it as the backend requires.

    The lexicon-backed backends need POS annotation, so only they
    resolve (and checksum) the WordNet directory.
    """
    dataset_path = cfg.path("dataset", resources.gold_dataset_path())
    ds = load_labeled(dataset_path)
    inputs = {"dataset": dataset_path}
    if backend in (Backend.CLASSICAL, Backend.SENSEVEC):
        wordnet_dir = cfg.path("wordnet", resources.miniwn_dir())
        wn = load_wordnet(wordnet_dir)
        ds = tokenize_dataset(ds, wn)
        inputs["wordnet"] = wordnet_dir
    else:
        ds = tokenize_dataset(ds)
    return ds, inputs


def _build_scorer(cfg: RunConfig, backend: Backend, inputs: dict[str, Path]):
    if backend is Backend.CLASSICAL:
        seeds_path = cfg.path("seeds", resources.default_seeds_path())
        wn = load_wordnet(cfg.path("wordnet", resources.miniwn_dir()))
        seeds = load_seeds(seeds_path, wn)
        inputs["seeds"] = seeds_path
        return make_scorer(backend, wn=wn, seeds=seeds)
    if backend is Backend.WORDVEC:
        vectors_path = cfg.path("vectors", resources.demo_word_vectors_path())
        inputs["vectors"] = vectors_path
        return make_scorer(backend,
                           vectors=load_vectors(vectors_path, VectorKind.WORD))
    if backend is Backend.SENSEVEC:
        vectors_path = cfg.path("vectors", resources.demo_sense_vectors_path())
        inputs["vectors"] = vectors_path
        return make_scorer(backend,
                           vectors=load_vectors(vectors_path, VectorKind.SENSE))
    # docvec: sentence vectors exist only for a corpus they were trained on,
    # so there is no bundled default
    value = cfg.get("vectors")
    if value is None:
        raise ConfigError("the docvec backend needs --vectors "
                          "(train them first with: fairmine train-docs)")
    vectors_path = cfg.path("vectors")
    inputs["vectors"] = vectors_path
    return make_scorer(backend,
                       vectors=load_vectors(vectors_path, VectorKind.DOC))


def cmd_classify(cfg: RunConfig) -> int:
    backend = cfg.backend()
    threshold = cfg.float_of("threshold", DEFAULT_THRESHOLD)
    validate_threshold(backend, threshold)
    workers = cfg.int_of("workers", 1)
    ds, inputs = _prepared_dataset(cfg, backend)
    scorer = _build_scorer(cfg, backend, inputs)
    scored = apply_threshold(score_dataset(scorer, ds, workers=workers),
                             threshold)
    out_dir = cfg.out_dir()
    out_path = out_dir / "scores.jsonl"
    save_scores(scored, out_path)
    write_manifest(out_dir, "classify",
                   {"backend": backend.value, "threshold": threshold,
                    "workers": workers,
                    **{role: str(path) for role, path in inputs.items()},
                    "out": str(out_dir)},
                   inputs)
    n_fair = sum(1 for s in scored if s.label_pred.value == "fair")
    print(f"scored {len(scored)} sentences with {backend.value} at threshold "
          f"{threshold:g}: {n_fair} fair, {len(scored) - n_fair} non-fair")
    print(f"wrote {out_path}")
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    backend = cfg.backend()
    grid = parse_grid(cfg.get("grid", DEFAULT_GRID_SPEC))
    for value in grid:
        validate_threshold(backend, value)
    workers = cfg.int_of("workers", 1)
    ds, inputs = _prepared_dataset(cfg, backend)
    unlabeled = [s.id for s in ds if s.label is None]
    if unlabeled:
        listed = ", ".join(unlabeled[:10])
        suffix = "" if len(unlabeled) <= 10 else f" (and {len(unlabeled) - 10} more)"
        raise DataError(f"sweep needs a fully labeled dataset; unlabeled: "
                        f"{listed}{suffix}")
    scorer = _build_scorer(cfg, backend, inputs)
    scores = score_dataset(scorer, ds, workers=workers)
    report = sweep(scores, ds, grid)

    out_dir = cfg.out_dir()
    save_sweep_report(report, out_dir / "sweep.json")
    written = [out_dir / "sweep.json"]
    if report.roc_fair is not None and report.roc_nonfair is not None:
        save_roc_csv(report.roc_fair, out_dir / "roc_fair.csv")
        save_roc_csv(report.roc_nonfair, out_dir / "roc_nonfair.csv")
        save_roc_svg((report.roc_fair, report.roc_nonfair), out_dir / "roc.svg")
        written += [out_dir / "roc_fair.csv", out_dir / "roc_nonfair.csv",
                    out_dir / "roc.svg"]
    write_manifest(out_dir, "sweep",
                   {"backend": backend.value, "grid": list(grid),
                    "workers": workers,
                    **{role: str(path) for role, path in inputs.items()},
                    "out": str(out_dir)},
                   inputs)

    print("threshold     tp    fp    fn    tn   macro-P  macro-R  macro-F1")
    for entry in report.entries:
        c, m = entry.confusion, entry.metrics
        print(f"{entry.threshold:9.2f} {c.tp:5d} {c.fp:5d} {c.fn:5d} {c.tn:5d}"
              f"   {m.macro_p:7.3f}  {m.macro_r:7.3f}  {m.f1:8.3f}")
    best = report.best_entry
    print(f"best threshold {best.threshold:g} with macro-F1 {best.metrics.f1:.3f}")
    if report.roc_fair is not None:
        print(f"AUC {report.roc_fair.auc:.3f} (both classes)")
    for path in written:
        print(f"wrote {path}")
    return 0


def _train_corpus(cfg: RunConfig, sense_mode: bool,
                  wordnet_dir: Optional[Path]) -> tuple[list[list[str]], dict[str, Path]]:
    paths = cfg.corpus_paths()
    inputs = {f"corpus[{i}]": path for i, path in enumerate(paths)}
    lines: list[str] = []
    for path in paths:
        lines.extend(load_plain_corpus(path))
    if sense_mode:
        wn = load_wordnet(wordnet_dir)
        inputs["wordnet"] = wordnet_dir
        corpus = [[sense_key(t) for t in annotate(tokenize(line), wn)
                   if any(c.isalnum() for c in t.surface)]
                  for line in lines]
    else:
        corpus = [word_lemmas(line) for line in lines]
    return corpus, inputs


def _cmd_train_sgns(cfg: RunConfig, sense_mode: bool) -> int:
    wordnet_dir = cfg.path("wordnet", resources.miniwn_dir()) if sense_mode else None
    corpus, inputs = _train_corpus(cfg, sense_mode, wordnet_dir)
    sgns_cfg = cfg.sgns_config()
    kind = VectorKind.SENSE if sense_mode else VectorKind.WORD
    table = train_sgns(corpus, sgns_cfg, kind=kind)
    out_dir = cfg.out_dir()
    name = "sense_vectors.txt" if sense_mode else "vectors.txt"
    out_path = out_dir / name
    save_vectors(table, out_path)
    command = "train-senses" if sense_mode else "train-words"
    settings = {"dim": sgns_cfg.dim, "window": sgns_cfg.window,
                "negatives": sgns_cfg.negatives, "epochs": sgns_cfg.epochs,
                "initial_lr": sgns_cfg.initial_lr, "min_lr": sgns_cfg.min_lr,
                "min_count": sgns_cfg.min_count,
                "subsample_t": sgns_cfg.subsample_t,
                "seed": sgns_cfg.rng_seed, "workers": sgns_cfg.workers,
                **{role: str(path) for role, path in inputs.items()},
                "out": str(out_dir)}
    write_manifest(out_dir, command, settings, inputs)
    print(f"trained {len(table)} {'sense' if sense_mode else 'word'} vectors "
          f"of dim {table.dim}")
    print(f"wrote {out_path}")
    return 0


def cmd_train_words(cfg: RunConfig) -> int:
    return _cmd_train_sgns(cfg, sense_mode=False)


def cmd_train_senses(cfg: RunConfig) -> int:
    return _cmd_train_sgns(cfg, sense_mode=True)


def cmd_train_docs(cfg: RunConfig) -> int:
    paths = cfg.corpus_paths()
    inputs: dict[str, Path] = {f"corpus[{i}]": p for i, p in enumerate(paths)}
    background: list[str] = []
    for path in paths:
        background.extend(load_plain_corpus(path))
    dataset_path = cfg.path("dataset", resources.gold_dataset_path())
    inputs["dataset"] = dataset_path
    targets = load_labeled(dataset_path)
    doc_cfg = cfg.docvec_config()
    table = train_pvdbow(background, targets, doc_cfg)
    out_dir = cfg.out_dir()
    out_path = out_dir / "doc_vectors.txt"
    save_vectors(table.docs, out_path)
    settings = {"dim": doc_cfg.dim, "negatives": doc_cfg.negatives,
                "epochs": doc_cfg.epochs, "initial_lr": doc_cfg.initial_lr,
                "min_lr": doc_cfg.min_lr, "min_count": doc_cfg.min_count,
                "seed": doc_cfg.rng_seed, "workers": doc_cfg.workers,
                **{role: str(path) for role, path in inputs.items()},
                "out": str(out_dir)}
    write_manifest(out_dir, "train-docs", settings, inputs)
    print(f"trained {len(table.docs)} sentence vectors of dim {table.dim} "
          f"({len(background)} background lines, {len(targets)} target sentences)")
    print(f"wrote {out_path}")
    return 0


# -- wiring --------------------------------------------------------------------


_COMMANDS = {
    "seed-expand": cmd_seed_expand,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "train-words": cmd_train_words,
    "train-senses": cmd_train_senses,
    "train-docs": cmd_train_docs,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fairmine",
                     description="Mine fairness-policy sentences from legal "
                                 "text by seed-set semantic relatedness.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    def add(name: str, help_text: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", metavar="FILE",
                       help="JSON config file; flags override its values")
        p.add_argument("--out", metavar="DIR",
                       help=f"output directory (default: {DEFAULT_OUT_DIR})")
        if "backend" in flags:
            p.add_argument("--backend", metavar="NAME",
                           help="classical | wordvec | sensevec | docvec "
                                "(default: classical)")
        if "threshold" in flags:
            p.add_argument("--threshold", type=float, metavar="R")
        if "grid" in flags:
            p.add_argument("--grid", metavar="A:B:STEP",
                           help=f"threshold grid (default {DEFAULT_GRID_SPEC})")
        if "wordnet" in flags:
            p.add_argument("--wordnet", metavar="DIR",
                           help="WordNet database directory (default: bundled)")
        if "vectors" in flags:
            p.add_argument("--vectors", metavar="FILE",
                           help="vector table in the plain text format")
        if "dataset" in flags:
            p.add_argument("--dataset", metavar="FILE",
                           help="JSON-lines sentence dataset (default: bundled)")
        if "seeds" in flags:
            p.add_argument("--seeds", metavar="FILE",
                           help="seed sense set JSON (default: bundled)")
        if "corpus" in flags:
            p.add_argument("--corpus", action="append", metavar="FILE",
                           help="plain text corpus, one sentence per line "
                                "(repeatable)")
        if "seed" in flags:
            p.add_argument("--seed", type=int, metavar="N",
                           help="random seed (default 1)")
        if "workers" in flags:
            p.add_argument("--workers", type=int, metavar="N",
                           help="worker threads (default 1; results are "
                                "identical either way)")
        return p

    add("seed-expand", "grow the seed sense set by taxonomy similarity",
        "wordnet", "seeds", "threshold")
    add("classify", "score sentences and label them fair / non-fair",
        "backend", "threshold", "wordnet", "seeds", "vectors", "dataset",
        "workers")
    add("sweep", "evaluate across a threshold grid and draw ROC curves",
        "backend", "grid", "wordnet", "seeds", "vectors", "dataset", "workers")
    add("train-words", "train word vectors on a plain text corpus",
        "corpus", "seed", "workers")
    add("train-senses", "train sense vectors (lemma|POS keys) on a corpus",
        "corpus", "wordnet", "seed", "workers")
    add("train-docs", "train sentence vectors over background plus targets",
        "corpus", "dataset", "seed", "workers")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.command, args)
        return _COMMANDS[args.command](cfg)
    except FairmineError as exc:
        print(f"fairmine {args.command}: error: {exc}", file=sys.stderr)
        for err_type, code in _EXIT_CODES:
            if isinstance(exc, err_type):
                return code
        return 1


if __name__ == "__main__":
    sys.exit(main())
