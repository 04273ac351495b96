"""Text cleaning, sentence detection, tokenization, and token chunking.

All functions are deterministic pure functions of their input plus the
bundled stopword/abbreviation lists (one entry per line, UTF-8).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import List, Sequence


def _load_wordlist(name: str) -> frozenset:
    text = resources.files("ontofreight.docprep").joinpath(
        f"resources/{name}"
    ).read_text(encoding="utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


STOPWORDS = _load_wordlist("stopwords.txt")
ABBREVIATIONS = _load_wordlist("abbreviations.txt")

_TERMINATORS = ".?!"


def normalize_text(text: str) -> str:
    """Lowercase and strip punctuation, keeping sentence terminators.

    Punctuation and special characters become single spaces except the
    terminators ``. ? !`` (kept as standalone tokens, runs collapsed) and
    hyphens between word characters. Whitespace collapses to single spaces.
    """
    lowered = text.lower()
    out = []
    for i, c in enumerate(lowered):
        if c.isalnum() or c.isspace() or c in _TERMINATORS:
            out.append(c)
        elif c == "-" and 0 < i < len(lowered) - 1 \
                and lowered[i - 1].isalnum() and lowered[i + 1].isalnum():
            out.append(c)
        else:
            out.append(" ")
    spaced = re.sub(r"[.?!]+", lambda m: f" {m.group(0)[0]} ", "".join(out))
    return re.sub(r"\s+", " ", spaced).strip()


def remove_stopwords(tokens: Sequence[str]) -> List[str]:
    """Drop tokens on the bundled stopword list, preserving order."""
    return [t for t in tokens if t.lower() not in STOPWORDS]


def _preceding_word(text: str, end: int) -> str:
    """Word (letters and internal dots) immediately before position end."""
    i = end
    while i > 0 and text[i - 1].isspace():
        i -= 1
    j = i
    while j > 0 and (text[j - 1].isalpha() or text[j - 1] == "."):
        j -= 1
    return text[j:i].strip(".").lower()


def _two_preceding_words(text: str, end: int) -> str:
    first = _preceding_word(text, end)
    i = end
    while i > 0 and text[i - 1].isspace():
        i -= 1
    while i > 0 and (text[i - 1].isalpha() or text[i - 1] == "."):
        i -= 1
    second = _preceding_word(text, i)
    return f"{second} {first}".strip()


def detect_sentences(text: str) -> List[str]:
    """Split at ``. ? !`` followed by space and a letter.

    A period does not end a sentence when the preceding word (or word
    pair) is on the bundled abbreviation list, so "see fig. 2" stays
    whole. Joining the output with single spaces reproduces the input
    modulo whitespace.
    """
    sentences = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in _TERMINATORS:
            j = i + 1
            while j < n and text[j] in _TERMINATORS:
                j += 1
            k = j
            while k < n and text[k].isspace():
                k += 1
            follows_letter = k < n and k > j and text[k].isalpha()
            if follows_letter:
                exempt = c == "." and (
                    _preceding_word(text, i) in ABBREVIATIONS
                    or _two_preceding_words(text, i) in ABBREVIATIONS
                )
                if not exempt:
                    sentence = text[start:j].strip()
                    if sentence:
                        sentences.append(sentence)
                    start = k
            i = j
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


_WORD_RE = re.compile(
    r"[A-Za-z0-9]+(?:[-.'][A-Za-z0-9]+)*\.?"
    r"|[,;:()!?]"
)


def tokenize(sentence: str) -> List[str]:
    """Split into word and punctuation-mark tokens.

    Hyphenated words and numbers stay whole; a trailing period is kept
    only on bundled abbreviations (``e.g.``, ``fig.``); delimiter marks
    (commas, colons, parentheses) come through as single-character tokens
    so phrase boundaries survive for downstream extraction.
    """
    tokens = []
    for raw in _WORD_RE.findall(sentence):
        if raw.endswith(".") and len(raw) > 1:
            core = raw[:-1]
            tokens.append(raw if core.lower() in ABBREVIATIONS else core)
        else:
            tokens.append(raw)
    return tokens


@dataclass
class TokenChunk:
    """A window of the token stream sized for one reasoning-core request."""

    tokens: List[str]
    section_index: int = 0
    overlap_prefix_length: int = 0

    def __post_init__(self) -> None:
        if self.overlap_prefix_length and self.overlap_prefix_length >= len(self.tokens):
            raise ValueError("overlap prefix must be shorter than the chunk")


def chunk(tokens: Sequence[str], budget: int, overlap: int,
          section_index: int = 0) -> List[TokenChunk]:
    """Window the token stream into chunks of at most ``budget`` tokens.

    Adjacent chunks share exactly ``overlap`` tokens (the last chunk may be
    shorter); concatenating chunks minus their overlap prefixes
    reconstructs the stream.
    """
    if overlap >= budget:
        raise ValueError("overlap must be smaller than the budget")
    if overlap < 0:
        raise ValueError("overlap must be non-negative")
    if not tokens:
        return []
    chunks = []
    start = 0
    while True:
        end = min(start + budget, len(tokens))
        chunks.append(
            TokenChunk(
                tokens=list(tokens[start:end]),
                section_index=section_index,
                overlap_prefix_length=overlap if start > 0 else 0,
            )
        )
        if end >= len(tokens):
            break
        start += budget - overlap
    return chunks
