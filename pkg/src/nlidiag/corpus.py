"""Dataset and prediction data model with line-delimited JSON I/O.

A dataset file carries one JSON object per line with keys ``premise``,
``hypothesis``, ``label``, and optional ``id``. A predictions file
carries ``id``, ``label``, and an optional ``scores`` array of three
numbers. Labels serialize as case-insensitive strings or the integer
codes 0/1/2. Everything is UTF-8.

All types are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Mapping, TextIO


class DataError(ValueError):
    """A file violated the dataset or predictions schema."""


class Label(Enum):
    ENTAILMENT = 0
    NEUTRAL = 1
    CONTRADICTION = 2

    @classmethod
    def parse(cls, raw: object) -> "Label":
        """Parse a serialized label: name string (any case) or code 0/1/2.

        Anything else raises DataError; there is no silent default.
        """
        if isinstance(raw, bool):
            raise DataError(f"invalid label: {raw!r}")
        if isinstance(raw, int):
            if raw in (0, 1, 2):
                return cls(raw)
            raise DataError(f"invalid label code: {raw}")
        if isinstance(raw, str):
            text = raw.strip()
            if text in ("0", "1", "2"):
                return cls(int(text))
            try:
                return cls[text.upper()]
            except KeyError:
                raise DataError(f"invalid label: {raw!r}") from None
        raise DataError(f"invalid label: {raw!r}")

    @property
    def display(self) -> str:
        return self.name.capitalize()


LABELS: tuple[Label, Label, Label] = (
    Label.ENTAILMENT,
    Label.NEUTRAL,
    Label.CONTRADICTION,
)


@dataclass(frozen=True)
class NLIExample:
    """One premise/hypothesis pair with its gold label and a stable id."""

    id: str
    premise: str
    hypothesis: str
    gold: Label

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("example id must be non-empty")
        if not self.premise.strip():
            raise ValueError(f"example {self.id!r}: premise is empty")
        if not self.hypothesis.strip():
            raise ValueError(f"example {self.id!r}: hypothesis is empty")


@dataclass(frozen=True)
class PredictionRecord:
    """A model's predicted label for one example, with optional scores.

    When scores are present they must be three finite numbers whose
    argmax (first maximum on ties) is the predicted label.
    """

    id: str
    predicted: Label
    scores: tuple[float, float, float] | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("prediction id must be non-empty")
        if self.scores is None:
            return
        if len(self.scores) != 3:
            raise ValueError(f"prediction {self.id!r}: expected 3 scores")
        for s in self.scores:
            if not math.isfinite(s):
                raise ValueError(f"prediction {self.id!r}: non-finite score {s!r}")
        argmax = max(range(3), key=lambda i: (self.scores[i], -i))
        if argmax != self.predicted.value:
            raise ValueError(
                f"prediction {self.id!r}: scores argmax is "
                f"{Label(argmax).display}, not {self.predicted.display}"
            )


@dataclass(frozen=True)
class DatasetStats:
    count_per_label: Mapping[Label, int]
    total: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.total == -1:
            object.__setattr__(self, "total", sum(self.count_per_label.values()))
        elif self.total != sum(self.count_per_label.values()):
            raise ValueError("total does not match per-label counts")


def _iter_json_lines(fh: TextIO, path: str) -> Iterator[tuple[int, dict]]:
    # Yields (1-based line number, object); blank lines are skipped.
    for lineno, line in enumerate(fh, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise DataError(f"{path}:{lineno}: expected a JSON object")
        yield lineno, obj


def _record_id(obj: dict, lineno: int, path: str) -> str | None:
    raw = obj.get("id")
    if raw is None:
        return None
    if isinstance(raw, str):
        if not raw:
            raise DataError(f"{path}:{lineno}: id must be non-empty")
        return raw
    if isinstance(raw, int) and not isinstance(raw, bool):
        return str(raw)
    raise DataError(f"{path}:{lineno}: id must be a string, got {type(raw).__name__}")


def _text_field(obj: dict, key: str, lineno: int, path: str) -> str:
    if key not in obj:
        raise DataError(f"{path}:{lineno}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, str):
        raise DataError(f"{path}:{lineno}: field {key!r} must be a string")
    if not value.strip():
        raise DataError(f"{path}:{lineno}: field {key!r} is empty")
    return value


def read_dataset(path: str | Path) -> list[NLIExample]:
    """Read a dataset file into examples, preserving file order.

    Ids come from each record's ``id`` field, or default to the record's
    0-based line index rendered as a decimal string. Malformed lines,
    duplicate ids, and unknown labels raise DataError naming the
    1-based line.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_dataset(fh, str(path))


def parse_dataset(fh: TextIO, source: str) -> list[NLIExample]:
    """read_dataset over an open text stream; *source* names it in errors."""
    examples: list[NLIExample] = []
    seen: set[str] = set()
    for lineno, obj in _iter_json_lines(fh, source):
        ex_id = _record_id(obj, lineno, source)
        if ex_id is None:
            ex_id = str(lineno - 1)
        if ex_id in seen:
            raise DataError(f"{source}:{lineno}: duplicate id {ex_id!r}")
        seen.add(ex_id)
        if "label" not in obj:
            raise DataError(f"{source}:{lineno}: missing field 'label'")
        try:
            example = NLIExample(
                id=ex_id,
                premise=_text_field(obj, "premise", lineno, source),
                hypothesis=_text_field(obj, "hypothesis", lineno, source),
                gold=Label.parse(obj["label"]),
            )
        except DataError:
            raise
        except ValueError as exc:
            raise DataError(f"{source}:{lineno}: {exc}") from None
        examples.append(example)
    return examples


def write_dataset(examples: Iterable[NLIExample], path: str | Path) -> None:
    """Write examples as line-delimited JSON; read_dataset round-trips it."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for ex in examples:
            fh.write(_dumps_example(ex))
            fh.write("\n")


def _dumps_example(ex: NLIExample) -> str:
    return json.dumps(
        {
            "id": ex.id,
            "premise": ex.premise,
            "hypothesis": ex.hypothesis,
            "label": ex.gold.display,
        },
        ensure_ascii=False,
    )


def dataset_stats(examples: Iterable[NLIExample]) -> DatasetStats:
    """Count examples per gold label. Accepts any iterable, streams once."""
    counts = {label: 0 for label in LABELS}
    total = 0
    for ex in examples:
        counts[ex.gold] += 1
        total += 1
    return DatasetStats(count_per_label=counts, total=total)


def read_predictions(path: str | Path) -> dict[str, PredictionRecord]:
    """Read a predictions file into a map keyed by example id.

    Missing ids default to the 0-based line index, mirroring
    read_dataset so order-aligned files stay joinable. Duplicate ids
    and score/argmax mismatches raise DataError.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_predictions(fh, str(path))


def parse_predictions(fh: TextIO, source: str) -> dict[str, PredictionRecord]:
    """read_predictions over an open text stream."""
    records: dict[str, PredictionRecord] = {}
    for lineno, obj in _iter_json_lines(fh, source):
        rec_id = _record_id(obj, lineno, source)
        if rec_id is None:
            rec_id = str(lineno - 1)
        if rec_id in records:
            raise DataError(f"{source}:{lineno}: duplicate id {rec_id!r}")
        if "label" not in obj:
            raise DataError(f"{source}:{lineno}: missing field 'label'")
        scores = _parse_scores(obj.get("scores"), lineno, source)
        try:
            record = PredictionRecord(
                id=rec_id,
                predicted=Label.parse(obj["label"]),
                scores=scores,
            )
        except DataError:
            raise
        except ValueError as exc:
            raise DataError(f"{source}:{lineno}: {exc}") from None
        records[rec_id] = record
    return records


def _parse_scores(
    raw: object, lineno: int, path: str
) -> tuple[float, float, float] | None:
    if raw is None:
        return None
    if not isinstance(raw, list) or len(raw) != 3:
        raise DataError(f"{path}:{lineno}: 'scores' must be an array of 3 numbers")
    values = []
    for s in raw:
        if isinstance(s, bool) or not isinstance(s, (int, float)):
            raise DataError(f"{path}:{lineno}: 'scores' must be an array of 3 numbers")
        values.append(float(s))
    return (values[0], values[1], values[2])


def write_predictions(
    records: Iterable[PredictionRecord], path: str | Path
) -> None:
    """Write prediction records as line-delimited JSON."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for rec in records:
            obj: dict[str, object] = {"id": rec.id, "label": rec.predicted.display}
            if rec.scores is not None:
                obj["scores"] = list(rec.scores)
            fh.write(json.dumps(obj, ensure_ascii=False))
            fh.write("\n")
