"""Document preparation: cleaning, sentence/token streams, chunking."""

from .document import (
    DocumentError,
    FigureSummaryError,
    Section,
    SourceDocument,
    document_from_dict,
    document_to_dict,
    load_document,
    summarize_figures,
)
from .prepare import (
    ABBREVIATIONS,
    STOPWORDS,
    TokenChunk,
    chunk,
    detect_sentences,
    normalize_text,
    remove_stopwords,
    tokenize,
)

__all__ = [
    "ABBREVIATIONS",
    "STOPWORDS",
    "DocumentError",
    "FigureSummaryError",
    "Section",
    "SourceDocument",
    "TokenChunk",
    "chunk",
    "detect_sentences",
    "document_from_dict",
    "document_to_dict",
    "load_document",
    "normalize_text",
    "remove_stopwords",
    "summarize_figures",
    "tokenize",
]
