"""Batched sequence-classification inference over a dataset file."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .records import CLASS_NAMES, Prediction, canonical_label, read_dataset, write_predictions


class ModelError(RuntimeError):
    """The checkpoint cannot serve as a 3-way NLI classifier."""


@dataclass(frozen=True)
class BridgeConfig:
    """Everything one inference run depends on.

    `labels` maps the model's output indices to class names and is given
    explicitly rather than read from checkpoint metadata: public
    checkpoints disagree on index order, and a silent mismatch would
    corrupt every downstream score.
    """

    model: str
    input_path: str | Path
    output_path: str | Path
    batch_size: int = 32
    device: str = "cpu"
    max_seq_length: int = 128
    labels: tuple[str, str, str] = field(default=CLASS_NAMES)

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError("batch size must be at least 1")
        if self.max_seq_length < 8:
            raise ValueError("max sequence length must be at least 8")
        if len(self.labels) != 3:
            raise ValueError("label mapping must name exactly 3 classes")
        normalized = tuple(canonical_label(name) for name in self.labels)
        if sorted(normalized) != sorted(CLASS_NAMES):
            raise ValueError(
                f"label mapping must cover {', '.join(CLASS_NAMES)} exactly once, "
                f"got {', '.join(normalized)}"
            )
        object.__setattr__(self, "labels", normalized)
        import torch

        torch.device(self.device)  # fail fast on an unknown selector


def run_inference(config: BridgeConfig) -> Path:
    """Run the model over every example and write one prediction each.

    Output order matches input order; ids pass through. Scores are
    softmax probabilities reordered into canonical class order
    (Entailment, Neutral, Contradiction), and the predicted label is
    their argmax, so the file always satisfies the prediction schema.
    """
    import torch
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    examples = read_dataset(config.input_path)

    tokenizer = AutoTokenizer.from_pretrained(config.model)
    model = AutoModelForSequenceClassification.from_pretrained(config.model)
    if model.config.num_labels != 3:
        raise ModelError(
            f"model head has {model.config.num_labels} output labels, expected 3"
        )
    model.to(config.device)
    model.eval()

    # canon_order[j] = canonical index of the model's j-th output
    canon_order = [CLASS_NAMES.index(name) for name in config.labels]

    predictions: list[Prediction] = []
    with torch.no_grad():
        for start in range(0, len(examples), config.batch_size):
            batch = examples[start : start + config.batch_size]
            encoded = tokenizer(
                [ex.premise for ex in batch],
                [ex.hypothesis for ex in batch],
                truncation=True,
                max_length=config.max_seq_length,
                padding=True,
                return_tensors="pt",
            ).to(config.device)
            probs = torch.softmax(model(**encoded).logits, dim=-1).cpu()
            for ex, row in zip(batch, probs):
                scores = [0.0, 0.0, 0.0]
                for j, p in enumerate(row.tolist()):
                    scores[canon_order[j]] = p
                best = max(range(3), key=lambda i: (scores[i], -i))
                predictions.append(
                    Prediction(
                        id=ex.id,
                        label=CLASS_NAMES[best],
                        scores=(scores[0], scores[1], scores[2]),
                    )
                )

    out = Path(config.output_path)
    write_predictions(predictions, out)
    return out
