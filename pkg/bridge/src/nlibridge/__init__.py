"""Batched transformer inference emitting toolkit-compatible predictions."""

from .bridge import BridgeConfig, ModelError, run_inference
from .records import (
    CLASS_NAMES,
    BridgeExample,
    DataError,
    Prediction,
    canonical_label,
    read_dataset,
    write_predictions,
)

__version__ = "0.1.0"

__all__ = [
    "BridgeConfig",
    "BridgeExample",
    "CLASS_NAMES",
    "DataError",
    "ModelError",
    "Prediction",
    "canonical_label",
    "read_dataset",
    "run_inference",
    "write_predictions",
    "__version__",
]
