"""Shared naming helpers: normalized keys, PascalCase and lowerCamelCase."""

from __future__ import annotations

import re

_CAMEL_SPLIT_1 = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")
_CAMEL_SPLIT_2 = re.compile(r"(?<=[A-Z])(?=[A-Z][a-z])")


def split_words(label: str) -> list:
    """Split a label into words across spaces, underscores, hyphens, camelCase."""
    text = _CAMEL_SPLIT_1.sub(" ", label)
    text = _CAMEL_SPLIT_2.sub(" ", text)
    text = re.sub(r"[_\-]+", " ", text)
    return [w for w in text.split() if w]


def singular(word: str) -> str:
    """Naive plural 's' strip; leaves short words and -ss endings alone."""
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def normalize_key(label: str) -> str:
    """Lowercased, space-unified key with the trailing plural 's' stripped."""
    words = [w.lower() for w in split_words(label)]
    if words:
        words[-1] = singular(words[-1])
    return " ".join(words)


def pascal_case(key: str) -> str:
    return "".join(w[:1].upper() + w[1:] for w in split_words(key))


def lower_camel(name: str) -> str:
    words = split_words(name)
    if not words:
        return ""
    head = words[0][:1].lower() + words[0][1:]
    return head + "".join(w[:1].upper() + w[1:] for w in words[1:])
