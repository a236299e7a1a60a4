"""nlidiag: corpus diagnostics for NLI datasets.

Quantifies word-overlap annotation artifacts, generates adversarial and
augmented dataset variants, and scores model predictions.
"""

__version__ = "0.1.0"

from .corpus import (
    DataError,
    DatasetStats,
    Label,
    LABELS,
    NLIExample,
    PredictionRecord,
    dataset_stats,
    read_dataset,
    read_predictions,
    write_dataset,
    write_predictions,
)
from .metrics import (
    ClassMetrics,
    ConfusionMatrix,
    MacroAverage,
    Report,
    build_confusion,
    class_metrics,
    macro_report,
    parse_report,
    render_report,
    subset_accuracy,
)
from .overlap import (
    Overlap,
    OverlapRecord,
    SplitResult,
    annotate_overlap,
    split_entailments,
    word_overlap,
)
from .perturb import (
    DEFAULT_ATTACK_SUFFIX,
    DEFAULT_NEUTRAL_POOL,
    Mode,
    NeutralSentencePool,
    PerturbationSpec,
    Target,
    append_suffix,
    attack_dataset,
    augment_dataset,
)
from .porter2 import stem_word
from .textnorm import TokenSequence, normalize, stem, tokenize

__all__ = [
    "__version__",
    "DataError",
    "DatasetStats",
    "Label",
    "LABELS",
    "NLIExample",
    "PredictionRecord",
    "dataset_stats",
    "read_dataset",
    "read_predictions",
    "write_dataset",
    "write_predictions",
    "ClassMetrics",
    "ConfusionMatrix",
    "MacroAverage",
    "Report",
    "build_confusion",
    "class_metrics",
    "macro_report",
    "parse_report",
    "render_report",
    "subset_accuracy",
    "Overlap",
    "OverlapRecord",
    "SplitResult",
    "annotate_overlap",
    "split_entailments",
    "word_overlap",
    "DEFAULT_ATTACK_SUFFIX",
    "DEFAULT_NEUTRAL_POOL",
    "Mode",
    "NeutralSentencePool",
    "PerturbationSpec",
    "Target",
    "append_suffix",
    "attack_dataset",
    "augment_dataset",
    "stem_word",
    "TokenSequence",
    "normalize",
    "stem",
    "tokenize",
]
