from __future__ import annotations

import pytest

from nlidiag.corpus import Label, NLIExample

# Reference premise/hypothesis pairs with known normalized forms and
# overlap values; used by the pipeline, overlap, and acceptance tests.
WORKED_ROWS = (
    (
        "Man wearing dark clothes walks down a street with a wall of "
        "graffiti to his left.",
        "The man is painting the street.",
    ),
    (
        "Two children are diving side by side into a river.",
        "Two children are diving off a high rock into a small river.",
    ),
    (
        "A small girl in a blue shirt with a posy pattern brushes her "
        "teeth with a red and yellow toothbrush.",
        "She punches through the wall",
    ),
)

WORKED_ROWS_NORMALIZED = (
    (
        ["man", "wear", "dark", "cloth", "walk", "down", "a", "street",
         "with", "a", "wall", "of", "graffiti", "to", "his", "left."],
        ["the", "man", "is", "paint", "the", "street."],
    ),
    (
        ["two", "children", "are", "dive", "side", "by", "side", "into",
         "a", "river."],
        ["two", "children", "are", "dive", "off", "a", "high", "rock",
         "into", "a", "small", "river."],
    ),
    (
        ["a", "small", "girl", "in", "a", "blue", "shirt", "with", "a",
         "posi", "pattern", "brush", "her", "teeth", "with", "a", "red",
         "and", "yellow", "toothbrush."],
        ["she", "punch", "through", "the", "wall"],
    ),
)

# (wo, n_unique_hyp, n_matched) for each worked row.
WORKED_ROWS_OVERLAP = ((0.2, 5, 1), (7 / 11, 11, 7), (0.0, 5, 0))

# Source hypothesis -> attacked hypothesis under the default suffix.
ATTACK_ROWS = (
    ("The animals are playing.",
     "The animals are playing and false is not true."),
    ("A person climbs a cliff face in the woods",
     "A person climbs a cliff face in the woods and false is not true."),
    ("Two men exchange conversation in a crowded arena",
     "Two men exchange conversation in a crowded arena and false is not true."),
    ("three guys in suit",
     "three guys in suit and false is not true."),
    ("A dog ran away from the racetrack",
     "A dog ran away from the racetrack and false is not true."),
)

# Adversarial-evaluation confusion counts, rows = actual E/N/C,
# columns = predicted E/N/C.
CONFUSION_COUNTS = ((220, 1803, 1306), (31, 2398, 806), (28, 192, 3058))

# One line per check in test_acceptance.py; echoed after the run so the
# verdicts are visible without -s or -rA.
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def worked_rows():
    return WORKED_ROWS


@pytest.fixture
def worked_rows_normalized():
    return WORKED_ROWS_NORMALIZED


def make_example(
    i: int,
    gold: Label = Label.ENTAILMENT,
    premise: str = "a premise sentence",
    hypothesis: str = "a hypothesis sentence",
) -> NLIExample:
    return NLIExample(id=str(i), premise=premise, hypothesis=hypothesis, gold=gold)
