"""Word-overlap scoring and the easy/tough entailment split.

WO is the fraction of unique normalized hypothesis tokens that also
occur among the premise's normalized tokens. Both sides use set
semantics: duplicating or reordering tokens never changes the value.
The denominator counts unique hypothesis tokens, so "The man is
painting the street." scores 1/5 against a premise sharing only "man"
(the two "the" tokens collapse).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import Label, NLIExample
from .textnorm import normalize


@dataclass(frozen=True)
class Overlap:
    """WO value with the counts it came from; wo == n_matched / n_unique_hyp."""

    wo: float
    n_unique_hyp: int
    n_matched: int

    def __post_init__(self) -> None:
        if not 0 <= self.n_matched <= self.n_unique_hyp:
            raise ValueError("matched count outside [0, unique hypothesis tokens]")


@dataclass(frozen=True)
class OverlapRecord:
    id: str
    wo: float
    n_unique_hyp: int
    n_matched: int


@dataclass(frozen=True)
class SplitResult:
    """Ids of the k highest-WO (easy) and k lowest-WO (tough) entailments."""

    easy: tuple[str, ...]
    tough: tuple[str, ...]
    k: int


def word_overlap(premise: str, hypothesis: str) -> Overlap:
    """Score one pair. Raises ValueError if the hypothesis normalizes
    to zero tokens (the ratio is undefined)."""
    hyp_tokens = set(normalize(hypothesis))
    if not hyp_tokens:
        raise ValueError("hypothesis has no tokens; overlap is undefined")
    prem_tokens = set(normalize(premise))
    matched = len(hyp_tokens & prem_tokens)
    return Overlap(
        wo=matched / len(hyp_tokens),
        n_unique_hyp=len(hyp_tokens),
        n_matched=matched,
    )


def annotate_overlap(examples: Iterable[NLIExample]) -> list[OverlapRecord]:
    """Score every example, preserving input order."""
    records = []
    for ex in examples:
        try:
            ov = word_overlap(ex.premise, ex.hypothesis)
        except ValueError as exc:
            raise ValueError(f"example {ex.id!r}: {exc}") from None
        records.append(
            OverlapRecord(
                id=ex.id,
                wo=ov.wo,
                n_unique_hyp=ov.n_unique_hyp,
                n_matched=ov.n_matched,
            )
        )
    return records


def split_entailments(examples: Sequence[NLIExample], k: int) -> SplitResult:
    """Select the k entailment examples with highest and lowest WO.

    Entailments are sorted by (wo descending, id ascending); easy is the
    first k ids in that order, tough the last k reported in
    (wo ascending, id ascending) order. Ties always break on id, so the
    selection is reproducible across runs. Raises ValueError when fewer
    than k entailment examples are available.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    entailments = [ex for ex in examples if ex.gold is Label.ENTAILMENT]
    if len(entailments) < k:
        raise ValueError(
            f"need at least {k} entailment examples, found {len(entailments)}"
        )
    scored = [(rec.wo, rec.id) for rec in annotate_overlap(entailments)]
    by_wo_desc = sorted(scored, key=lambda item: (-item[0], item[1]))
    easy = tuple(ex_id for _, ex_id in by_wo_desc[:k])
    tough = tuple(ex_id for _, ex_id in sorted(by_wo_desc[-k:]))
    return SplitResult(easy=easy, tough=tough, k=k)
