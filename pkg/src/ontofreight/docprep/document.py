"""Structured source documents: the JSON input format for the pipeline."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Union


class DocumentError(ValueError):
    pass


@dataclass
class Section:
    heading: str
    body: str = ""
    figure_captions: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.body and not self.figure_captions:
            raise DocumentError(
                f"section {self.heading!r}: body may be empty only when "
                "figure captions are present"
            )


@dataclass
class SourceDocument:
    title: str
    keywords: List[str] = field(default_factory=list)
    sections: List[Section] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.title:
            raise DocumentError("document title must be non-empty")
        if not self.sections:
            raise DocumentError("document must have at least one section")


def document_from_dict(data: dict) -> SourceDocument:
    try:
        sections = [
            Section(
                heading=s.get("heading", ""),
                body=s.get("body", ""),
                figure_captions=list(s.get("figure_captions", [])),
            )
            for s in data["sections"]
        ]
        return SourceDocument(
            title=data["title"],
            keywords=list(data.get("keywords", [])),
            sections=sections,
        )
    except KeyError as exc:
        raise DocumentError(f"document JSON missing field: {exc}") from None


def document_to_dict(doc: SourceDocument) -> dict:
    return {
        "title": doc.title,
        "keywords": list(doc.keywords),
        "sections": [
            {
                "heading": s.heading,
                "body": s.body,
                "figure_captions": list(s.figure_captions),
            }
            for s in doc.sections
        ],
    }


def load_document(path: Union[str, Path]) -> SourceDocument:
    with open(path, encoding="utf-8") as handle:
        return document_from_dict(json.load(handle))


class FigureSummaryError(RuntimeError):
    def __init__(self, index: int, cause: Exception) -> None:
        super().__init__(f"figure caption {index}: {cause}")
        self.index = index


def summarize_figures(captions: List[str], core) -> List[str]:
    """One summary per caption via the reasoning core, order preserved.

    The rule-based core returns captions verbatim; failures propagate with
    the offending caption index.
    """
    summaries = []
    for i, caption in enumerate(captions):
        try:
            summaries.append(core.summarize_caption(caption))
        except Exception as exc:
            raise FigureSummaryError(i, exc) from exc
    return summaries
