"""Deterministic text normalization: lowercase, whitespace split, stem.

The pipeline is intentionally minimal. Tokens are whatever survives a
whitespace split of the lowercased input, so punctuation stays attached
to its word ("left." is one token). Stemming is applied per token and
skips any token whose final character is not a letter, because suffix
rules only ever match letter suffixes.
"""

from __future__ import annotations

from .porter2 import stem_word

# A token list. Tokens are non-empty, contain no whitespace, and all
# cased characters are lowercase; guaranteed by construction here.
TokenSequence = list[str]

_ASCII_LETTERS = frozenset("abcdefghijklmnopqrstuvwxyz")
# Apostrophes participate in stemming (possessive stripping), so a
# trailing apostrophe does not make a token pass through.
_STEMMABLE_FINAL = _ASCII_LETTERS | {"'", "’", "‘", "‛"}


def tokenize(text: str) -> TokenSequence:
    """Lowercase *text* and split on runs of whitespace.

    Empty fragments are dropped, so any amount of leading, trailing, or
    internal whitespace collapses. Empty input yields an empty list.
    """
    return text.lower().split()


def stem(token: str) -> str:
    """Return the English stem of *token*.

    Tokens ending in a non-letter character (e.g. a trailing ".") match
    no suffix rule and are returned unchanged. Raises ValueError on an
    empty token.
    """
    if not token:
        raise ValueError("cannot stem an empty token")
    if token[-1].lower() not in _STEMMABLE_FINAL:
        return token
    return stem_word(token)


def normalize(text: str) -> TokenSequence:
    """tokenize(text) with stem applied to each token.

    Degenerate tokens whose stem is empty (possessive apostrophe
    fragments like "''s") are dropped so the output only ever contains
    non-empty tokens.
    """
    return [s for s in (stem(tok) for tok in tokenize(text)) if s]
