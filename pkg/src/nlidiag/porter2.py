"""English Snowball (Porter2) stemmer.

Pure-Python implementation of the English Snowball stemming algorithm,
written against the published rule set. The stemmer lowercases its input,
handles apostrophes, marks consonant "y" internally as "Y", computes the
R1/R2 regions once, and then applies suffix steps 0 through 5 with
longest-match semantics. Region boundaries are tracked as absolute indices
into the evolving word, which matches the cursor-limit behaviour of the
reference implementation.

The stemmer operates on single lowercase words; feeding it text with
whitespace or punctuation-only strings is undefined. Whole-token
punctuation handling lives in :mod:`nlidiag.textnorm`, not here.
"""

from __future__ import annotations

__all__ = ["stem_word"]

_VOWELS = frozenset("aeiouy")

_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")

# Letters that may precede a deletable final "li".
_LI_ENDINGS = frozenset("cdeghkmnrt")

# Irregular forms, checked against the whole word before any other step.
_EXCEPTIONS = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}

# Words left alone once step 1a has run (catches their plural forms too).
_STOP_AFTER_1A = frozenset(
    ["inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"]
)

# R1 starts right after these prefixes instead of at the first
# vowel/non-vowel pair.
_R1_PREFIXES = ("gener", "commun", "arsen")

# Step 2 and 3 tables: (suffix, replacement), longest first. "ogi" and "li"
# carry extra context conditions handled inline.
_STEP2 = (
    ("ization", "ize"),
    ("ational", "ate"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("iveness", "ive"),
    ("tional", "tion"),
    ("biliti", "ble"),
    ("lessli", "less"),
    ("entli", "ent"),
    ("ation", "ate"),
    ("alism", "al"),
    ("aliti", "al"),
    ("ousli", "ous"),
    ("iviti", "ive"),
    ("fulli", "ful"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("abli", "able"),
    ("izer", "ize"),
    ("ator", "ate"),
    ("alli", "al"),
    ("bli", "ble"),
    ("ogi", "og"),
    ("li", ""),
)

_STEP3 = (
    ("ational", "ate"),
    ("tional", "tion"),
    ("alize", "al"),
    ("icate", "ic"),
    ("iciti", "ic"),
    ("ative", ""),
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
)

# Step 4 deletions, longest first; "ion" needs a preceding "s" or "t".
_STEP4 = (
    "ement",
    "ance",
    "ence",
    "able",
    "ible",
    "ment",
    "ant",
    "ent",
    "ism",
    "ate",
    "iti",
    "ous",
    "ive",
    "ize",
    "ion",
    "al",
    "er",
    "ic",
)


def _region_after_vc(word: str, start: int) -> int:
    """Index after the first vowel/non-vowel pair at or beyond ``start``."""
    n = len(word)
    i = start
    while i < n and word[i] not in _VOWELS:
        i += 1
    if i == n:
        return n
    i += 1
    while i < n and word[i] in _VOWELS:
        i += 1
    if i == n:
        return n
    return i + 1


def _mark_regions(word: str) -> tuple[int, int]:
    r1 = len(word)
    for prefix in _R1_PREFIXES:
        if word.startswith(prefix):
            r1 = len(prefix)
            break
    else:
        r1 = _region_after_vc(word, 0)
    r2 = _region_after_vc(word, r1)
    return r1, r2


def _ends_short_syllable(word: str) -> bool:
    # Either non-vowel, vowel, non-vowel (not w/x/Y) at the end, or the
    # whole word is vowel + non-vowel.
    n = len(word)
    if n >= 3:
        if (
            word[-1] not in _VOWELS
            and word[-1] not in "wxY"
            and word[-2] in _VOWELS
            and word[-3] not in _VOWELS
        ):
            return True
    if n == 2 and word[0] in _VOWELS and word[1] not in _VOWELS:
        return True
    return False


def _step0(word: str) -> str:
    for suffix in ("'s'", "'s", "'"):
        if word.endswith(suffix):
            return word[: -len(suffix)]
    return word


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ied") or word.endswith("ies"):
        # Replace by "i" when more than one letter precedes the suffix.
        if len(word) > 4:
            return word[:-2]
        return word[:-1]
    if word.endswith("us") or word.endswith("ss"):
        return word
    if word.endswith("s"):
        # Delete when a vowel occurs before the letter preceding the "s".
        if any(c in _VOWELS for c in word[:-2]):
            return word[:-1]
    return word


def _step1b(word: str, r1: int) -> str:
    for suffix in ("eedly", "ingly", "edly", "eed", "ing", "ed"):
        if not word.endswith(suffix):
            continue
        if suffix in ("eed", "eedly"):
            if len(word) - len(suffix) >= r1:
                return word[: -len(suffix)] + "ee"
            return word
        stem = word[: -len(suffix)]
        if not any(c in _VOWELS for c in stem):
            return word
        if stem.endswith(("at", "bl", "iz")):
            return stem + "e"
        if stem.endswith(_DOUBLES):
            return stem[:-1]
        if len(stem) == r1 and _ends_short_syllable(stem):
            return stem + "e"
        return stem
    return word


def _step1c(word: str) -> str:
    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        return word[:-1] + "i"
    return word


def _step2(word: str, r1: int) -> str:
    for suffix, replacement in _STEP2:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r1:
            return word
        if suffix == "ogi":
            if word[-4] == "l":
                return word[:-1]
            return word
        if suffix == "li":
            if word[-3] in _LI_ENDINGS:
                return word[:-2]
            return word
        return word[: -len(suffix)] + replacement
    return word


def _step3(word: str, r1: int, r2: int) -> str:
    for suffix, replacement in _STEP3:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r1:
            return word
        if suffix == "ative":
            if len(word) - len(suffix) >= r2:
                return word[:-5]
            return word
        return word[: -len(suffix)] + replacement
    return word


def _step4(word: str, r2: int) -> str:
    for suffix in _STEP4:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r2:
            return word
        if suffix == "ion":
            if word[-4] in "st":
                return word[:-3]
            return word
        return word[: -len(suffix)]
    return word


def _step5(word: str, r1: int, r2: int) -> str:
    if word.endswith("e"):
        pos = len(word) - 1
        if pos >= r2:
            return word[:-1]
        if pos >= r1 and not _ends_short_syllable(word[:-1]):
            return word[:-1]
        return word
    if word.endswith("l"):
        if len(word) - 1 >= r2 and word[-2] == "l":
            return word[:-1]
    return word


def stem_word(word: str) -> str:
    """Return the English Snowball (Porter2) stem of ``word``.

    The input is lowercased first. Words of two letters or fewer, and the
    fixed list of irregular forms, are returned as-is per the algorithm.
    """
    word = word.lower()

    if word in _EXCEPTIONS:
        return _EXCEPTIONS[word]
    if len(word) <= 2:
        return word

    # Normalize typographic apostrophes, then drop a single leading one.
    word = word.replace("’", "'").replace("‘", "'").replace("‛", "'")
    if word.startswith("'"):
        word = word[1:]

    # Mark consonant "y" as "Y" so it is not treated as a vowel below.
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _VOWELS:
            chars[i] = "Y"
    word = "".join(chars)

    r1, r2 = _mark_regions(word)

    word = _step0(word)
    word = _step1a(word)
    if word in _STOP_AFTER_1A:
        return word
    word = _step1b(word, r1)
    word = _step1c(word)
    word = _step2(word, r1)
    word = _step3(word, r1, r2)
    word = _step4(word, r2)
    word = _step5(word, r1, r2)

    return word.replace("Y", "y")
