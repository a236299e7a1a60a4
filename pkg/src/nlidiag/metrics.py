"""Confusion matrices, per-class precision/recall/F1, macro aggregates,
and subset accuracy.

The matrix is oriented rows = actual label, columns = predicted label.
Empty denominators yield 0 by convention and the affected classes are
flagged when a report is rendered. All internal math is full-precision
float; rendering rounds to one decimal in percent.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import LABELS, Label, PredictionRecord

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 grid of counts; counts[actual][predicted], indexed by Label code."""

    counts: tuple[tuple[int, int, int], ...]
    n: int = -1

    def __post_init__(self) -> None:
        if len(self.counts) != 3 or any(len(row) != 3 for row in self.counts):
            raise ValueError("confusion matrix must be 3x3")
        if any(c < 0 for row in self.counts for c in row):
            raise ValueError("confusion matrix counts must be non-negative")
        total = sum(c for row in self.counts for c in row)
        if self.n == -1:
            object.__setattr__(self, "n", total)
        elif self.n != total:
            raise ValueError(f"n={self.n} does not match cell sum {total}")

    def cell(self, actual: Label, predicted: Label) -> int:
        return self.counts[actual.value][predicted.value]

    def row_sum(self, actual: Label) -> int:
        return sum(self.counts[actual.value])

    def col_sum(self, predicted: Label) -> int:
        return sum(row[predicted.value] for row in self.counts)

    def trace(self) -> int:
        return sum(self.counts[i][i] for i in range(3))


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class MacroAverage:
    """Unweighted means of the per-class metrics."""

    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class Report:
    per_class: Mapping[Label, ClassMetrics]
    macro: MacroAverage
    accuracy: float
    confusion: ConfusionMatrix


def build_confusion(
    gold: Sequence[tuple[str, Label]],
    preds: Mapping[str, PredictionRecord],
) -> ConfusionMatrix:
    """Tally cell[actual][predicted] over every gold example.

    Every gold id must have a prediction; up to 10 missing ids are named
    in the error. Prediction ids absent from gold are logged and ignored.
    """
    missing = [ex_id for ex_id, _ in gold if ex_id not in preds]
    if missing:
        shown = ", ".join(repr(m) for m in missing[:10])
        more = f", and {len(missing) - 10} more" if len(missing) > 10 else ""
        raise ValueError(f"missing predictions for {len(missing)} ids: {shown}{more}")
    extra = len(preds) - len({ex_id for ex_id, _ in gold} & preds.keys())
    if extra:
        log.warning("%d prediction ids not in the gold set; ignored", extra)
    cells = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    for ex_id, actual in gold:
        cells[actual.value][preds[ex_id].predicted.value] += 1
    return ConfusionMatrix(counts=tuple(tuple(row) for row in cells))


def class_metrics(cm: ConfusionMatrix, c: Label) -> ClassMetrics:
    """Precision, recall, F1, and support for one class.

    An empty predicted column or gold row makes the corresponding metric
    0 rather than undefined.
    """
    hit = cm.cell(c, c)
    col = cm.col_sum(c)
    row = cm.row_sum(c)
    precision = hit / col if col else 0.0
    recall = hit / row if row else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return ClassMetrics(precision=precision, recall=recall, f1=f1, support=row)


def macro_report(cm: ConfusionMatrix) -> Report:
    """Full report: per-class metrics, unweighted macro means, accuracy."""
    if cm.n == 0:
        raise ValueError("cannot report on an empty confusion matrix")
    per_class = {c: class_metrics(cm, c) for c in LABELS}
    macro = MacroAverage(
        precision=sum(m.precision for m in per_class.values()) / 3,
        recall=sum(m.recall for m in per_class.values()) / 3,
        f1=sum(m.f1 for m in per_class.values()) / 3,
    )
    return Report(
        per_class=per_class,
        macro=macro,
        accuracy=cm.trace() / cm.n,
        confusion=cm,
    )


def subset_accuracy(
    ids: Sequence[str],
    gold: Mapping[str, Label],
    preds: Mapping[str, PredictionRecord],
) -> float:
    """Fraction of the given ids where the prediction matches gold."""
    if not ids:
        raise ValueError("subset accuracy over an empty id list is undefined")
    correct = 0
    for ex_id in ids:
        if ex_id not in gold:
            raise ValueError(f"id {ex_id!r} not in the gold set")
        if ex_id not in preds:
            raise ValueError(f"id {ex_id!r} has no prediction")
        if preds[ex_id].predicted is gold[ex_id]:
            correct += 1
    return correct / len(ids)


def _zero_denominator_classes(cm: ConfusionMatrix) -> list[str]:
    return [
        c.display for c in LABELS if cm.row_sum(c) == 0 or cm.col_sum(c) == 0
    ]


def render_report(report: Report, format: str = "markdown") -> str:
    """Render a report as machine-readable JSON or a paper-style
    markdown table (per-class rows plus a bold Overall row)."""
    if format == "json":
        return _render_json(report)
    if format == "markdown":
        return _render_markdown(report)
    raise ValueError(f"unknown report format: {format!r}")


def _render_json(report: Report) -> str:
    payload = {
        "per_class": {
            c.display: {
                "precision": m.precision,
                "recall": m.recall,
                "f1": m.f1,
                "support": m.support,
            }
            for c, m in report.per_class.items()
        },
        "macro": {
            "precision": report.macro.precision,
            "recall": report.macro.recall,
            "f1": report.macro.f1,
        },
        "accuracy": report.accuracy,
        "confusion": {
            "rows": "actual",
            "columns": "predicted",
            "labels": [c.display for c in LABELS],
            "counts": [list(row) for row in report.confusion.counts],
            "n": report.confusion.n,
        },
        "zero_denominator_classes": _zero_denominator_classes(report.confusion),
    }
    return json.dumps(payload, ensure_ascii=False, indent=2)


def parse_report(text: str) -> Report:
    """Rebuild a Report from its JSON rendering; exact for every value."""
    payload = json.loads(text)
    per_class = {}
    for c in LABELS:
        entry = payload["per_class"][c.display]
        per_class[c] = ClassMetrics(
            precision=entry["precision"],
            recall=entry["recall"],
            f1=entry["f1"],
            support=entry["support"],
        )
    macro = MacroAverage(
        precision=payload["macro"]["precision"],
        recall=payload["macro"]["recall"],
        f1=payload["macro"]["f1"],
    )
    confusion = ConfusionMatrix(
        counts=tuple(tuple(row) for row in payload["confusion"]["counts"]),
        n=payload["confusion"]["n"],
    )
    return Report(
        per_class=per_class,
        macro=macro,
        accuracy=payload["accuracy"],
        confusion=confusion,
    )


def _pct(value: float) -> str:
    return f"{value * 100:.1f}"


def _render_markdown(report: Report) -> str:
    lines = [
        "| Label | Precision | Recall | F1 |",
        "| --- | --- | --- | --- |",
    ]
    for c in LABELS:
        m = report.per_class[c]
        lines.append(
            f"| {c.display} | {_pct(m.precision)} | {_pct(m.recall)} | {_pct(m.f1)} |"
        )
    macro = report.macro
    lines.append(
        f"| **Overall** | **{_pct(macro.precision)}** "
        f"| **{_pct(macro.recall)}** | **{_pct(macro.f1)}** |"
    )
    lines.append("")
    lines.append(f"Accuracy: {_pct(report.accuracy)}% (n={report.confusion.n})")
    flagged = _zero_denominator_classes(report.confusion)
    if flagged:
        lines.append(
            "Zero-denominator convention applied for: " + ", ".join(flagged)
        )
    return "\n".join(lines) + "\n"
