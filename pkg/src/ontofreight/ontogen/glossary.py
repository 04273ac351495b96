"""Glossary extraction with iterative persistence filtering."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..docprep.prepare import TokenChunk
from .core import ReasoningCore
from .keys import normalize_key


@dataclass
class GlossaryTerm:
    """A surviving glossary entry.

    ``support`` counts how many extraction iterations proposed the term;
    ``is_individual``/``instance_of`` carry the core's instance tagging so
    the emitter can split classes from individuals.
    """

    label: str
    key: str
    definition: Optional[str] = None
    support: int = 1
    source_section: int = 0
    is_individual: bool = False
    instance_of: Optional[str] = None


class GlossaryExtractionError(RuntimeError):
    def __init__(self, chunk_index: int, cause: Exception) -> None:
        super().__init__(f"glossary extraction failed on chunk {chunk_index}: {cause}")
        self.chunk_index = chunk_index


def persistence_threshold(iterations: int, fraction: float) -> int:
    """Minimum support for a term to survive: ceil(N * tau)."""
    return math.ceil(iterations * fraction)


def extract_glossary(
    chunks: Sequence[TokenChunk],
    title: str,
    keywords: Sequence[str],
    core: ReasoningCore,
    iterations: int = 3,
    threshold_fraction: float = 2 / 3,
) -> Tuple[List[GlossaryTerm], List[str]]:
    """Run the core ``iterations`` times per chunk and keep persistent terms.

    A term survives when its per-chunk support (iterations that proposed
    it) reaches ``ceil(N * tau)`` in at least one chunk. Returns the
    surviving terms (deduplicated by normalized key, ordered by key) and
    the keys dropped by the persistence filter.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    threshold = persistence_threshold(iterations, threshold_fraction)

    best_support: dict = {}
    entries: dict = {}
    for chunk_index, token_chunk in enumerate(chunks):
        counts: dict = {}
        for _ in range(iterations):
            try:
                proposals = core.extract_terms(token_chunk, title, list(keywords))
            except Exception as exc:  # noqa: BLE001 - identified and re-raised
                raise GlossaryExtractionError(chunk_index, exc) from exc
            seen_this_iteration = set()
            for proposal in proposals:
                key = normalize_key(proposal.label)
                if not key or key in seen_this_iteration:
                    continue
                seen_this_iteration.add(key)
                counts[key] = counts.get(key, 0) + 1
                if key not in entries:
                    entries[key] = GlossaryTerm(
                        label=proposal.label,
                        key=key,
                        definition=proposal.definition,
                        source_section=token_chunk.section_index,
                        is_individual=proposal.is_instance,
                        instance_of=proposal.instance_of,
                    )
        for key, count in counts.items():
            best_support[key] = max(best_support.get(key, 0), count)

    surviving = []
    dropped = []
    for key in sorted(entries):
        support = best_support.get(key, 0)
        if support >= threshold:
            term = entries[key]
            term.support = support
            surviving.append(term)
        else:
            dropped.append(key)
    return surviving, dropped


def verify_consistency(
    glossary: Sequence[GlossaryTerm], section, core: ReasoningCore
) -> Tuple[List[GlossaryTerm], List[str]]:
    """Keep only terms the core confirms against the section content."""
    labels = [t.label for t in glossary]
    confirmed = set(core.confirm_terms(labels, section))
    kept = [t for t in glossary if t.label in confirmed]
    dropped = sorted(t.key for t in glossary if t.label not in confirmed)
    return kept, dropped
