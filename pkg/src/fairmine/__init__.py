"""Fairness-policy sentence mining.

Scores sentences of legal text for semantic relatedness to a set of
fairness seed terms and labels those above a threshold as fairness
policies.  Four interchangeable scoring backends are provided: taxonomy
similarity over a WordNet-format lexicon, word vectors, sense vectors,
and sentence (document) vectors.  An evaluation harness sweeps decision
thresholds and draws ROC curves against labeled gold data.
"""

from .classify import (
    Backend,
    ClassicalScorer,
    ClassifierConfig,
    DEFAULT_SEED_DOC_IDS,
    DEFAULT_SEED_SENSE_KEYS,
    DEFAULT_SEED_WORDS,
    DEFAULT_THRESHOLD,
    DocVectorScorer,
    ScoredSentence,
    SenseVectorScorer,
    SentenceScore,
    WordVectorScorer,
    apply_threshold,
    classify_dataset,
    load_scores,
    make_scorer,
    save_scores,
    score_dataset,
    validate_threshold,
)
from .corpus import (
    Dataset,
    Label,
    LabeledSentence,
    POS,
    STOPWORDS,
    Token,
    annotate,
    load_labeled,
    load_plain_corpus,
    pos_lookup,
    save_labeled,
    tokenize,
    tokenize_dataset,
    word_lemmas,
)
from .docvec import (
    BACKGROUND_ID_FORMAT,
    DocVectorTable,
    DocvecConfig,
    doc_vector,
    tagged_corpus,
    train_pvdbow,
)
from .embeddings import (
    SgnsConfig,
    TableMeta,
    VectorKind,
    VectorSource,
    VectorTable,
    cosine,
    load_vectors,
    pair_gradients,
    pair_loss,
    save_vectors,
    sense_key,
    train_sgns,
)
from .errors import ConfigError, DataError, FairmineError, ResourceError
from .evaluate import (
    ConfusionCounts,
    DEFAULT_GRID,
    MacroMetrics,
    RocCurve,
    SweepEntry,
    SweepReport,
    confusion,
    macro_prf,
    roc,
    roc_svg,
    roc_to_csv,
    save_roc_csv,
    save_roc_svg,
    save_sweep_report,
    sweep,
)
from .wordnet import (
    DEFAULT_CAP,
    DEFAULT_EXPAND_THRESHOLD,
    SeedOrigin,
    SeedSenseSet,
    SimilarityMeasure,
    Synset,
    SynsetId,
    WndbEntry,
    WordnetGraph,
    expand_seeds,
    lch,
    lch_norm,
    lcs_depth,
    load_seeds,
    load_wordnet,
    path_len,
    save_seeds,
    senses,
    similarity,
    word_seed_similarity,
    write_wndb,
    wup,
)

__version__ = "0.1.0"

__all__ = [
    "BACKGROUND_ID_FORMAT",
    "Backend",
    "ClassicalScorer",
    "ClassifierConfig",
    "ConfigError",
    "ConfusionCounts",
    "DEFAULT_CAP",
    "DEFAULT_EXPAND_THRESHOLD",
    "DEFAULT_GRID",
    "DEFAULT_SEED_DOC_IDS",
    "DEFAULT_SEED_SENSE_KEYS",
    "DEFAULT_SEED_WORDS",
    "DEFAULT_THRESHOLD",
    "DataError",
    "Dataset",
    "DocVectorScorer",
    "DocVectorTable",
    "DocvecConfig",
    "FairmineError",
    "Label",
    "LabeledSentence",
    "MacroMetrics",
    "POS",
    "ResourceError",
    "RocCurve",
    "STOPWORDS",
    "ScoredSentence",
    "SeedOrigin",
    "SeedSenseSet",
    "SenseVectorScorer",
    "SentenceScore",
    "SgnsConfig",
    "SimilarityMeasure",
    "SweepEntry",
    "SweepReport",
    "Synset",
    "SynsetId",
    "TableMeta",
    "Token",
    "VectorKind",
    "VectorSource",
    "VectorTable",
    "WndbEntry",
    "WordVectorScorer",
    "WordnetGraph",
    "annotate",
    "apply_threshold",
    "classify_dataset",
    "confusion",
    "cosine",
    "doc_vector",
    "expand_seeds",
    "lch",
    "lch_norm",
    "lcs_depth",
    "load_labeled",
    "load_plain_corpus",
    "load_scores",
    "load_seeds",
    "load_vectors",
    "load_wordnet",
    "macro_prf",
    "make_scorer",
    "pair_gradients",
    "pair_loss",
    "path_len",
    "pos_lookup",
    "roc",
    "roc_svg",
    "roc_to_csv",
    "save_labeled",
    "save_roc_csv",
    "save_roc_svg",
    "save_scores",
    "save_seeds",
    "save_sweep_report",
    "save_vectors",
    "score_dataset",
    "sense_key",
    "senses",
    "similarity",
    "sweep",
    "tagged_corpus",
    "tokenize",
    "tokenize_dataset",
    "train_pvdbow",
    "train_sgns",
    "validate_threshold",
    "word_lemmas",
    "word_seed_similarity",
    "write_wndb",
    "wup",
]
