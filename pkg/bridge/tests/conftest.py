import json
import os

# No test may touch the network; checkpoints are built locally.
os.environ.setdefault("HF_HUB_OFFLINE", "1")
os.environ.setdefault("TRANSFORMERS_VERBOSITY", "error")
os.environ.setdefault("HF_HUB_DISABLE_PROGRESS_BARS", "1")

import pytest

_VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    "a", "the", "man", "dog", "cat", "is", "runs", "sleeps", "eats",
    "two", "children", "are", "diving", "river", "into", "##s",
]


def _build_checkpoint(directory, num_labels):
    import torch
    from transformers import BertConfig, BertForSequenceClassification, BertTokenizerFast

    directory.mkdir(parents=True, exist_ok=True)
    vocab_file = directory / "vocab.txt"
    vocab_file.write_text("\n".join(_VOCAB) + "\n", encoding="utf-8")
    BertTokenizerFast(vocab_file=str(vocab_file)).save_pretrained(directory)

    torch.manual_seed(0)
    config = BertConfig(
        vocab_size=len(_VOCAB),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
        num_labels=num_labels,
    )
    BertForSequenceClassification(config).save_pretrained(directory)
    return directory


@pytest.fixture(scope="session")
def checkpoint(tmp_path_factory):
    return str(_build_checkpoint(tmp_path_factory.mktemp("ckpt") / "three", 3))


@pytest.fixture(scope="session")
def two_label_checkpoint(tmp_path_factory):
    return str(_build_checkpoint(tmp_path_factory.mktemp("ckpt") / "two", 2))


DATASET_ROWS = [
    ("e0", "the man runs", "a dog sleeps", "Neutral"),
    ("e1", "two children are diving into a river", "two children are diving", "Entailment"),
    ("e2", "a cat eats", "the cat runs", "Contradiction"),
    ("e3", "the dog runs", "the dog runs", "Entailment"),
    ("e4", "a man sleeps", "two children are diving", "Neutral"),
    ("e5", "the cat sleeps", "a cat is diving", "Contradiction"),
    ("e6", "two children run", "a man is diving", "Neutral"),
    ("e7", "a river", "the river", "Entailment"),
    ("e8", "the man eats", "the man sleeps", "Contradiction"),
    ("e9", "a dog is diving into a river", "a dog is diving", "Entailment"),
]


@pytest.fixture
def dataset_path(tmp_path):
    path = tmp_path / "dataset.jsonl"
    with path.open("w", encoding="utf-8") as fh:
        for ex_id, premise, hypothesis, label in DATASET_ROWS:
            fh.write(
                json.dumps(
                    {"id": ex_id, "premise": premise, "hypothesis": hypothesis, "label": label}
                )
                + "\n"
            )
    return path
