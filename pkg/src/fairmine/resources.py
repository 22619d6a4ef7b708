"""Access to the small resources bundled with the package.

The package ships a self-contained starter kit so every pipeline runs
out of the box: a compact WordNet-format lexicon focused on fairness and
discrimination vocabulary, a default seed sense file grown from it, a
labeled gold set of sentences taken verbatim from United States
anti-discrimination statutes, and two small demonstration vector tables
aligned with that gold set.  Real deployments can substitute a full
WordNet directory and larger vector tables through the same loaders.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .corpus import Dataset, load_labeled
from .embeddings import VectorKind, VectorTable, load_vectors
from .errors import ResourceError
from .wordnet import SeedSenseSet, WordnetGraph, load_seeds, load_wordnet


def resource_path(name: str) -> Path:
    """Filesystem path of a bundled resource file (or directory)."""
    path = Path(str(resources.files(__package__) / "resources" / name))
    if not path.exists():
        raise ResourceError(f"bundled resource missing: {name}")
    return path


def miniwn_dir() -> Path:
    """Directory of the bundled WordNet-format lexicon."""
    return resource_path("miniwn")


def default_seeds_path() -> Path:
    return resource_path("seed_senses.json")


def gold_dataset_path() -> Path:
    return resource_path("gold_sentences.jsonl")


def demo_word_vectors_path() -> Path:
    return resource_path("vectors_words.txt")


def demo_sense_vectors_path() -> Path:
    return resource_path("vectors_senses.txt")


def load_miniwn() -> WordnetGraph:
    return load_wordnet(miniwn_dir())


def load_default_seeds(wn: WordnetGraph | None = None) -> SeedSenseSet:
    return load_seeds(default_seeds_path(), wn)


def load_gold_dataset() -> Dataset:
    return load_labeled(gold_dataset_path())


def load_demo_word_vectors() -> VectorTable:
    return load_vectors(demo_word_vectors_path(), kind=VectorKind.WORD)


def load_demo_sense_vectors() -> VectorTable:
    return load_vectors(demo_sense_vectors_path(), kind=VectorKind.SENSE)
