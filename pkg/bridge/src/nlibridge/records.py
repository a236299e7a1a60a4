"""Reading and writing the dataset/prediction JSONL wire formats.

The bridge deliberately talks to the diagnostics toolkit through its
file formats alone, so the schema rules are restated here: one JSON
object per line, UTF-8, blank lines skipped, ids unique and defaulting
to the 0-based line index, labels given as class names
(case-insensitive), as the integers 0/1/2, or as those integers in
string form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

CLASS_NAMES = ("Entailment", "Neutral", "Contradiction")
_BY_KEY = {name.lower(): name for name in CLASS_NAMES}


class DataError(ValueError):
    """A dataset file violates the wire format."""


def canonical_label(raw: object) -> str:
    """Map any accepted label spelling to its canonical class name."""
    if isinstance(raw, bool):
        raise DataError(f"invalid label {raw!r}")
    if isinstance(raw, int):
        if 0 <= raw <= 2:
            return CLASS_NAMES[raw]
        raise DataError(f"invalid label {raw!r}")
    if isinstance(raw, str):
        key = raw.strip().lower()
        if key in _BY_KEY:
            return _BY_KEY[key]
        if key.isdigit() and 0 <= int(key) <= 2:
            return CLASS_NAMES[int(key)]
    raise DataError(f"invalid label {raw!r}")


@dataclass(frozen=True)
class BridgeExample:
    id: str
    premise: str
    hypothesis: str
    label: str


def read_dataset(path: str | Path) -> list[BridgeExample]:
    """Load a dataset file, reporting 1-based line numbers on errors."""
    examples: list[BridgeExample] = []
    seen: set[str] = set()
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            if not isinstance(obj, dict):
                raise DataError(f"{path}:{lineno}: expected a JSON object")
            for field in ("premise", "hypothesis", "label"):
                if field not in obj:
                    raise DataError(f"{path}:{lineno}: missing field {field!r}")
            raw_id = obj.get("id", lineno - 1)
            ex_id = str(raw_id)
            if ex_id in seen:
                raise DataError(f"{path}:{lineno}: duplicate id {ex_id!r}")
            seen.add(ex_id)
            try:
                label = canonical_label(obj["label"])
            except DataError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
            premise, hypothesis = obj["premise"], obj["hypothesis"]
            if not isinstance(premise, str) or not isinstance(hypothesis, str):
                raise DataError(f"{path}:{lineno}: premise/hypothesis must be strings")
            examples.append(
                BridgeExample(id=ex_id, premise=premise, hypothesis=hypothesis, label=label)
            )
    return examples


@dataclass(frozen=True)
class Prediction:
    id: str
    label: str
    scores: tuple[float, float, float]


def write_predictions(predictions: Iterable[Prediction], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for pred in predictions:
            fh.write(
                json.dumps(
                    {"id": pred.id, "label": pred.label, "scores": list(pred.scores)},
                    ensure_ascii=False,
                )
            )
            fh.write("\n")
