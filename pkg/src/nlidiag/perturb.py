"""Suffix-append transforms: the fixed adversarial attack and the
pool-based training augmentation.

Both transforms rewrite only the hypothesis. The suffix draw for
augmentation is a pure function of (seed, example id), so output is
identical no matter how many workers run or in what order examples are
processed.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import NLIExample

# Appended to every hypothesis by the attack transform.
DEFAULT_ATTACK_SUFFIX = " and false is not true."

_TERMINAL_PUNCT = frozenset(".!?")
_MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class NeutralSentencePool:
    """Ordered suffix pool. Each suffix is stored in appended form,
    beginning with exactly one space."""

    suffixes: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.suffixes:
            raise ValueError("suffix pool must be non-empty")
        normalized = []
        for s in self.suffixes:
            if not s.strip():
                raise ValueError("pool suffixes must be non-empty")
            normalized.append(" " + s.lstrip())
        object.__setattr__(self, "suffixes", tuple(normalized))

    @classmethod
    def from_file(cls, path: str | Path) -> "NeutralSentencePool":
        """Load a pool from a text file, one suffix per line.

        Blank lines are skipped; leading whitespace is normalized to the
        single space the appended form carries.
        """
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(tuple(line for line in lines if line.strip()))

    def __len__(self) -> int:
        return len(self.suffixes)


# The pool used for augmentation unless the caller supplies one.
DEFAULT_NEUTRAL_POOL = NeutralSentencePool(
    (
        " and false is no true",
        " and any true is true",
        " and false is never true",
        " and anything true is true",
        " and false is not true",
    )
)


class Mode(Enum):
    FIXED_SUFFIX = "fixed"
    RANDOM_FROM_POOL = "random"


class Target(Enum):
    # extension point; premise targeting is deliberately unimplemented
    HYPOTHESIS = "hypothesis"


@dataclass(frozen=True)
class PerturbationSpec:
    pool: NeutralSentencePool
    seed: int = 0
    mode: Mode = Mode.RANDOM_FROM_POOL
    target: Target = Target.HYPOTHESIS

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MAX_SEED:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.mode is Mode.FIXED_SUFFIX and len(self.pool) != 1:
            raise ValueError(
                f"fixed-suffix mode requires a pool of 1, got {len(self.pool)}"
            )


def append_suffix(hypothesis: str, suffix: str) -> str:
    """Append *suffix* to *hypothesis*.

    One trailing terminal-punctuation character (., !, ?) is stripped if
    it is the final character, then trailing whitespace is trimmed, then
    the suffix is concatenated verbatim. The result never starts with
    whitespace, so a degenerate empty hypothesis yields the bare suffix.
    """
    if not suffix:
        raise ValueError("suffix must be non-empty")
    text = hypothesis
    if text and text[-1] in _TERMINAL_PUNCT:
        text = text[:-1]
    text = text.rstrip()
    return (text + suffix).lstrip()


def _suffix_index(seed: int, example_id: str, pool_size: int) -> int:
    # Keyed hash of the id; independent of processing order and thread
    # count, and stable across platforms and interpreter runs.
    digest = hashlib.blake2b(
        example_id.encode("utf-8"),
        digest_size=8,
        key=seed.to_bytes(8, "big"),
    ).digest()
    return int.from_bytes(digest, "big") % pool_size


def _perturbed(ex: NLIExample, suffix: str) -> NLIExample:
    return replace(ex, hypothesis=append_suffix(ex.hypothesis, suffix))


def attack_dataset(
    examples: Iterable[NLIExample], spec: PerturbationSpec
) -> list[NLIExample]:
    """Append the spec's single suffix to every hypothesis.

    Ids, gold labels, and premises pass through untouched.
    """
    if spec.mode is not Mode.FIXED_SUFFIX:
        raise ValueError("attack_dataset requires fixed-suffix mode")
    suffix = spec.pool.suffixes[0]
    return [_perturbed(ex, suffix) for ex in examples]


def augment_dataset(
    examples: Sequence[NLIExample],
    spec: PerturbationSpec,
    *,
    max_workers: int = 1,
) -> list[NLIExample]:
    """Append a per-example pseudorandom pool suffix to every hypothesis.

    The draw depends only on (spec.seed, example id), so reruns and
    parallel runs produce byte-identical output. Output order equals
    input order regardless of max_workers.
    """
    if spec.mode is not Mode.RANDOM_FROM_POOL:
        raise ValueError("augment_dataset requires random-from-pool mode")
    pool = spec.pool.suffixes

    def one(ex: NLIExample) -> NLIExample:
        return _perturbed(ex, pool[_suffix_index(spec.seed, ex.id, len(pool))])

    if max_workers <= 1:
        return [one(ex) for ex in examples]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(one, examples))
